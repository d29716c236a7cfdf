#pragma once

// Finite-dimensional Lie algebras over Q given by structure constants in a
// fixed basis, plus linear maps between them. The structure tensor is kept
// as adjoint matrices: ad(i) * y = [e_i, y].

#include <memory>
#include <string>
#include <vector>

#include "xmodlie/subspace.hpp"
#include "xmodlie/verdict.hpp"

namespace xmodlie {

class LieAlgebra;
using LiePtr = std::shared_ptr<const LieAlgebra>;

class LieAlgebra {
 public:
  /// ad[i] is dim x dim with column j = coordinates of [e_i, e_j].
  LieAlgebra(std::string name, Index dim, std::vector<RatMatrix> ad);

  static LiePtr abelian(std::string name, Index dim);

  Index dim() const { return dim_; }
  const std::string& name() const { return name_; }

  const RatMatrix& ad(Index i) const { return ad_[static_cast<std::size_t>(i)]; }

  /// Structure constant c(i,j,k): coefficient of e_k in [e_i, e_j].
  const Rational& c(Index i, Index j, Index k) const { return ad(i)(k, j); }

  RatVector bracket_basis(Index i, Index j) const { return ad(i).col(j); }
  RatVector bracket(const RatVector& x, const RatVector& y) const;

  /// Matrix of y -> [x, y].
  RatMatrix ad_of(const RatVector& x) const;

  /// Matrix of x -> [x, e_j].
  RatMatrix right_bracket_matrix(Index j) const;

 private:
  std::string name_;
  Index dim_;
  std::vector<RatMatrix> ad_;
};

/// Antisymmetry (incl. [e_i,e_i] = 0) and the Jacobi identity on all basis
/// tuples. Bilinearity makes the basis check complete.
Verdict verify_lie(const LieAlgebra& L);

/// Span of all basis brackets; this span is already an ideal.
Subspace derived_subalgebra(const LieAlgebra& L);

/// Kernel of the stacked maps x -> [x, e_j].
Subspace center(const LieAlgebra& L);

/// Smallest bracket-closed subspace containing seed; iterates
/// span + brackets until the dimension stabilizes (at most dim rounds).
Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& seed);

/// [s, s] inside s.
bool bracket_closed(const LieAlgebra& L, const Subspace& s);

/// [L, s] inside s, i.e. s is an ideal (when also a subspace of L).
bool bracket_stable(const LieAlgebra& L, const Subspace& s);

struct LieHom {
  LiePtr source;
  LiePtr target;
  RatMatrix matrix;  // target dim x source dim

  RatVector apply(const RatVector& x) const { return matrix * x; }
  bool surjective() const;
  Subspace kernel() const { return kernel_basis(matrix); }
  Subspace image() const { return column_space(matrix); }
};

LieHom identity_hom(const LiePtr& L);
LieHom zero_hom(const LiePtr& source, const LiePtr& target);
LieHom compose(const LieHom& g, const LieHom& f);  // g after f

/// Bracket preservation on all basis pairs.
Verdict hom_check(const LieHom& f);

struct LieQuotient {
  LiePtr algebra;
  LieHom proj;
  RatMatrix section;  // source dim x quotient dim, proj.matrix * section = I
};

/// Quotient by a (checked) ideal; the diagnostic carries a witness pair
/// when [L, ideal] is not inside ideal.
Expected<LieQuotient> quotient_lie(const LiePtr& L, const Subspace& ideal,
                                   std::string name = {});

/// Restriction of L to a bracket-closed subspace, with the inclusion map.
/// Diagnostic when the subspace is not closed under the bracket.
struct LieSub {
  LiePtr algebra;
  LieHom include;
};
Expected<LieSub> restrict_lie(const LiePtr& L, const Subspace& sub,
                              std::string name = {});

struct LieSum {
  LiePtr algebra;
  LieHom proj_left, proj_right;
  LieHom incl_left, incl_right;
};
LieSum direct_sum(const LiePtr& a, const LiePtr& b, std::string name = {});

/// Pairing <f, g>: x -> (f(x), g(x)) into a direct sum.
LieHom pair_hom(const LieSum& sum, const LieHom& f, const LieHom& g);

}  // namespace xmodlie
