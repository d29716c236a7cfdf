#pragma once

// The non-abelian tensor product M (x) N of two Lie algebras acting on each
// other, computed as a quotient of the vector-space tensor product by the
// relation subspace W spanned by the bilinear relation families
//   R1(i,i',j) = [e_i,e_i'] (x) e_j - e_i (x) (e_i'.e_j) + e_i' (x) (e_i.e_j)
//   R2(i,j,j') = e_i (x) [e_j,e_j'] - (e_j'*e_i) (x) e_j + (e_j*e_i) (x) e_j'
// with the bracket on the quotient induced from
//   [(m (x) n), (m' (x) n')] = -(n*m) (x) (m'.n').
// Scalar and additive relations hold by construction in the vector model.
// Well-definedness of the bracket and the Lie axioms of the quotient are
// verified, never assumed.

#include <functional>

#include "xmodlie/action.hpp"

namespace xmodlie {

struct TensorPresentation {
  LiePtr left;    // M
  LiePtr right;   // N
  Action act_lr;  // M acting on N (written . )
  Action act_rl;  // N acting on M (written * )

  Index ambient = 0;        // dim M * dim N, symbols row-major (i major)
  RatMatrix relation_rows;  // raw R1 then R2 generators, one per row
  Subspace relations;       // W = canonical span of relation_rows
  QuotientMap q;            // proj/section between ambient and the quotient
  LiePtr quotient;          // M (x) N with cached structure constants

  Index sym(Index i, Index j) const { return i * right->dim() + j; }

  std::string relation_label(Index row) const;

  /// vec(x (x) y) in the ambient space.
  RatVector vec_pure(const RatVector& x, const RatVector& y) const {
    return kron(x, y);
  }

  /// The class of x (x) y in the quotient; bilinear in both slots.
  RatVector pure(const RatVector& x, const RatVector& y) const;
};

using TensorPtr = std::shared_ptr<const TensorPresentation>;

/// Builds M (x) N. Diagnostics (never a malformed algebra) when the actions
/// fail their axioms, the induced bracket does not preserve W, or the
/// quotient violates antisymmetry/Jacobi — the action pair is then
/// incompatible.
Expected<TensorPtr> build_nonabelian_tensor(const LiePtr& m, const LiePtr& n,
                                            const Action& act_mn,
                                            const Action& act_nm,
                                            std::string name = {});

/// Functorial map f (x) g between presentations. Checks equivariance of
/// (f, g) with respect to the four actions and that the symbol map sends
/// W_src into W_tgt; returns a verified Lie homomorphism of the quotients.
Expected<LieHom> induced_hom(const TensorPresentation& src,
                             const TensorPresentation& tgt, const LieHom& f,
                             const LieHom& g);

/// A map out of the quotient defined by its values on basis symbols
/// (columns of `symbol_values`, one per symbol). Checks that the linear
/// extension annihilates every relation generator (reported by its R1/R2
/// index otherwise) and that the induced map preserves brackets.
Expected<LieHom> generator_map(const TensorPresentation& tp,
                               const RatMatrix& symbol_values,
                               const LiePtr& target);

/// A bilinear map defined on basis symbols of two presentations with values
/// in Q^d, checked to vanish against both relation subspaces so that it
/// descends to a bilinear map of the quotients.
class QuotientBilinear {
 public:
  using SymbolFn = std::function<RatVector(Index, Index)>;

  static Expected<QuotientBilinear> build(TensorPtr a, TensorPtr b, Index d,
                                          const SymbolFn& value,
                                          const std::string& what);

  /// Value on quotient coordinates, through the sections.
  RatVector eval_quotient(const RatVector& qa, const RatVector& qb) const;

  /// Value on ambient vectors of the two presentations.
  RatVector eval_ambient(const RatVector& xa, const RatVector& xb) const;

 private:
  TensorPtr a_, b_;
  RatMatrix symbols_;  // d x (ambient_a * ambient_b)
};

}  // namespace xmodlie
