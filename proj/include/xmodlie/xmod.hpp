#pragma once

// Crossed modules of Lie algebras: a boundary homomorphism d: M -> N with an
// action of N on M, subject to equivariance and the Peiffer identity. Also
// their morphisms, centers, commutators, products, quotients, and the
// (non-braided) extension classification.

#include "xmodlie/action.hpp"

namespace xmodlie {

struct CrossedModule {
  LieHom boundary;  // d: M -> N
  Action action;    // N acting on M

  const LiePtr& m() const { return boundary.source; }
  const LiePtr& n() const { return boundary.target; }
};

using XModPtr = std::shared_ptr<const CrossedModule>;

/// Equivariance d(n.m) = [n, dm] and Peiffer d(m).m' = [m, m'] on all basis
/// pairs. Assumes the action itself has been verified.
Verdict verify_xmod(const CrossedModule& x);

/// M^N = {m : n.m = 0 for all n}.
Subspace fixed_points(const CrossedModule& x);

/// st_N(M) = {n : n.m = 0 for all m}.
Subspace stabilizer(const CrossedModule& x);

/// Flags of a candidate crossed submodule (S inside M, T inside N).
struct SubmodulePairFlags {
  bool m_subalgebra = false;     // S closed under the bracket of M
  bool n_subalgebra = false;     // T closed under the bracket of N
  bool boundary_into = false;    // d(S) inside T
  bool action_restricts = false; // T . S inside S

  bool crossed_submodule() const {
    return m_subalgebra && n_subalgebra && boundary_into && action_restricts;
  }
};

SubmodulePairFlags submodule_flags(const CrossedModule& x, const Subspace& s,
                                   const Subspace& t);

/// Center pair (M^N, st_N(M) n Z(N)) with the crossed-submodule flags
/// computed, never assumed: whether d(M^N) lands in the second component is
/// reported per instance.
struct CenterPair {
  Subspace fixed;  // M^N
  Subspace zst;    // st_N(M) n Z(N)
  SubmodulePairFlags flags;
};
CenterPair xmod_center(const CrossedModule& x);

/// Commutator pair (D_N(M), [N,N]) where D_N(M) is the subalgebra closure
/// of the span of action values.
struct CommutatorPair {
  Subspace d;        // D_N(M)
  Subspace derived;  // [N,N]
  SubmodulePairFlags flags;
  bool d_ideal = false;  // [M, D] inside D
};
CommutatorPair xmod_commutator(const CrossedModule& x);

bool is_perfect_xmod(const CrossedModule& x);

struct XModMorphism {
  XModPtr source;
  XModPtr target;
  LieHom f1;  // M -> L
  LieHom f2;  // N -> H
};

XModMorphism xmod_identity(const XModPtr& x);

/// Lie-hom checks on both components plus XLieH1 and XLieH2.
Verdict xmod_morphism_check(const XModMorphism& f);

struct XModExtClass {
  Verdict morphism;      // precondition record
  bool extension = false;
  bool central = false;  // kernels inside the center pair of the source
  Subspace ker1, ker2;
  Subspace fixed, zst;   // source centers, for diagnostics
};
XModExtClass classify_xmod_extension(const XModMorphism& f);

struct XModProduct {
  XModPtr prod;
  XModMorphism proj1, proj2;
  XModMorphism incl1, incl2;
  LieSum m_sum, n_sum;
};
XModProduct product_xmod(const XModPtr& x, const XModPtr& y);

/// Quotient by an ideal pair. Preconditions (all checked, witnesses
/// reported): I1 ideal of M, I2 ideal of N, d(I1) in I2, N.I1 in I1,
/// I2.M in I1.
struct XModQuotient {
  XModPtr quot;
  XModMorphism proj;
  RatMatrix section_m, section_n;
};
Expected<XModQuotient> quotient_xmod(const XModPtr& x, const Subspace& i1,
                                     const Subspace& i2);

/// Restriction to a crossed submodule pair, with the inclusion morphism.
struct XModSub {
  XModPtr sub;
  XModMorphism incl;
};
Expected<XModSub> crossed_submodule(const XModPtr& x, const Subspace& s,
                                    const Subspace& t);

}  // namespace xmodlie
