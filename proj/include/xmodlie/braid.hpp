#pragma once

// Braidings (Peiffer liftings) on crossed modules: a bilinear map
// {-,-}: N x N -> M subject to BLie1..BLie6, stored as the full
// (dim N)^2 x dim M value tensor. Braided centers, commutators, morphisms,
// extension classification (central vs compatible-central), products,
// quotients, and the non-perfect witness construction.

#include "xmodlie/xmod.hpp"

namespace xmodlie {

struct Braiding {
  Index actor_dim = 0;   // dim N
  Index module_dim = 0;  // dim M
  RatMatrix values;      // (actor_dim^2) x module_dim; row j*actor_dim+jp = {e_j, e_jp}

  Index row_index(Index j, Index jp) const { return j * actor_dim + jp; }

  RatVector value(Index j, Index jp) const {
    return values.row(row_index(j, jp)).transpose();
  }

  RatVector eval(const RatVector& x, const RatVector& y) const;

  /// Matrix of y -> {x, y}.
  RatMatrix left_matrix(const RatVector& x) const;

  /// Matrix of x -> {x, y}.
  RatMatrix right_matrix(const RatVector& y) const;
};

struct BraidedXMod {
  CrossedModule xmod;
  Braiding braiding;

  const LiePtr& m() const { return xmod.m(); }
  const LiePtr& n() const { return xmod.n(); }
};

using BxPtr = std::shared_ptr<const BraidedXMod>;

/// The bracket braiding {x,y} = [x,y] on the identity crossed module
/// (L -> L, adjoint).
BxPtr identity_braided(const LiePtr& L);

/// BLie1..BLie6 on all basis tuples (pairs for 1-4, triples for 5-6).
/// Assumes the underlying crossed module has been verified.
Verdict verify_braiding(const BraidedXMod& bx);

struct BraidedCenter {
  Subspace fixed;          // M^N
  Subspace zb;             // Z_B(N)
  bool fixed_matches_boundary_preimage = false;  // M^N == {m : dm in Z_B}
};
BraidedCenter braided_center(const BraidedXMod& bx);

struct BraidedCommutator {
  Subspace b;        // B_N(M): closure of the braiding-value span
  Subspace d;        // D_N(M), for the inclusion chain report
  Subspace mm;       // [M,M]
  Subspace derived;  // [N,N]
  bool chain_holds = false;  // [M,M] in D in B
  bool b_ideal = false;      // [M, B] in B
};
BraidedCommutator braided_commutator(const BraidedXMod& bx);

bool is_perfect_braided(const BraidedXMod& bx);

struct BraidedMorphism {
  BxPtr source;
  BxPtr target;
  LieHom f1;  // M -> L
  LieHom f2;  // N -> H

  XModMorphism underlying() const;
};

BraidedMorphism braided_identity(const BxPtr& bx);
BraidedMorphism compose(const BraidedMorphism& g, const BraidedMorphism& f);

/// Crossed-module morphism checks plus BXLieH3 on basis pairs.
Verdict braided_morphism_check(const BraidedMorphism& f);

struct BraidedExtClass {
  Verdict morphism;
  bool extension = false;
  bool central = false;             // kernels inside (M^N, Z_B(N))
  bool compatible_central = false;  // kernels inside (M^N, Z(N) n st_N(M))
  Subspace ker1, ker2;
  Subspace fixed, zb, zst;  // the source subspaces the flags compare against
};
BraidedExtClass classify_braided_extension(const BraidedMorphism& f);

struct BraidedProduct {
  BxPtr prod;
  BraidedMorphism proj1, proj2;
  BraidedMorphism incl1, incl2;
};
BraidedProduct product_braided(const BxPtr& x, const BxPtr& y);

/// Pairing <f, g> into a product previously formed from f's and g's targets.
BraidedMorphism pair_braided(const BraidedProduct& prod,
                             const BraidedMorphism& f,
                             const BraidedMorphism& g);

struct BraidedQuotient {
  BxPtr quot;
  BraidedMorphism proj;
};

/// Quotient by an ideal pair; on top of the crossed-module preconditions the
/// braiding must send (I2, N) and (N, I2) into I1 (checked).
Expected<BraidedQuotient> quotient_braided(const BxPtr& bx, const Subspace& i1,
                                           const Subspace& i2);

/// Quotient by the commutator braided crossed submodule; the projection is
/// the cokernel map of the commutator inclusion.
Expected<BraidedQuotient> cokernel_of_commutator(const BxPtr& bx);

/// Restriction to a braided crossed submodule; requires braiding values of
/// (T, T) to land in S.
struct BraidedSub {
  BxPtr sub;
  BraidedMorphism incl;
};
Expected<BraidedSub> braided_submodule(const BxPtr& bx, const Subspace& s,
                                       const Subspace& t);

/// Given a central extension Psi over a non-perfect source Y, produces the
/// product extension pi1: target x (Y / commutator) -> target together with
/// h = <Psi, 0> and g = <Psi, coker projection>, which satisfy
/// pi1 . h = Psi = pi1 . g and h != g.
struct NonPerfectWitness {
  BxPtr product;
  BraidedMorphism pi1;
  BraidedMorphism h;
  BraidedMorphism g;
  BraidedExtClass pi1_class;
  bool composites_match = false;
  bool h_differs_from_g = false;
};
Expected<NonPerfectWitness> non_perfect_witness(const BraidedMorphism& psi);

}  // namespace xmodlie
