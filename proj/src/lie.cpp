#include "xmodlie/lie.hpp"

namespace xmodlie {

LieAlgebra::LieAlgebra(std::string name, Index dim, std::vector<RatMatrix> ad)
    : name_(std::move(name)), dim_(dim), ad_(std::move(ad)) {
  if (ad_.size() != static_cast<std::size_t>(dim_))
    throw XmodError(ErrorKind::internal, "LieAlgebra: tensor arity mismatch");
  for (const auto& m : ad_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw XmodError(ErrorKind::internal, "LieAlgebra: tensor shape mismatch");
}

LiePtr LieAlgebra::abelian(std::string name, Index dim) {
  std::vector<RatMatrix> ad(static_cast<std::size_t>(dim),
                            RatMatrix::Zero(dim, dim));
  return std::make_shared<LieAlgebra>(std::move(name), dim, std::move(ad));
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
  if (x.rows() != dim_ || y.rows() != dim_)
    throw XmodError(ErrorKind::internal, "bracket: dimension mismatch");
  RatVector out = RatVector::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x(i) == 0) continue;
    out += x(i) * (ad(i) * y);
  }
  return out;
}

RatMatrix LieAlgebra::ad_of(const RatVector& x) const {
  RatMatrix out = RatMatrix::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i)
    if (x(i) != 0) out += x(i) * ad(i);
  return out;
}

RatMatrix LieAlgebra::right_bracket_matrix(Index j) const {
  RatMatrix out(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) out.col(i) = bracket_basis(i, j);
  return out;
}

Verdict verify_lie(const LieAlgebra& L) {
  Verdict v;
  const Index n = L.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      if (!is_zero(RatVector(L.bracket_basis(i, j) + L.bracket_basis(j, i))))
        v.fail("antisymmetry", {i, j});
  if (!v.pass()) return v;  // Jacobi is only meaningful once brackets pair up
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        RatVector jac = L.bracket(RatVector(L.bracket_basis(i, j)),
                                  unit_vector(n, k)) +
                        L.bracket(RatVector(L.bracket_basis(j, k)),
                                  unit_vector(n, i)) +
                        L.bracket(RatVector(L.bracket_basis(k, i)),
                                  unit_vector(n, j));
        if (!is_zero(jac)) v.fail("jacobi", {i, j, k});
      }
  return v;
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  const Index n = L.dim();
  RatMatrix rows(n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      rows.row(i * n + j) = L.bracket_basis(i, j).transpose();
  return Subspace::span_rows(n, rows);
}

Subspace center(const LieAlgebra& L) {
  const Index n = L.dim();
  RatMatrix stacked(n * n, n);
  for (Index j = 0; j < n; ++j)
    stacked.middleRows(j * n, n) = L.right_bracket_matrix(j);
  return kernel_basis(stacked);
}

Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& seed) {
  Subspace current = seed;
  for (Index round = 0; round <= L.dim(); ++round) {
    const Index d = current.dim();
    RatMatrix extra(d * d, L.dim());
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b)
        extra.row(a * d + b) =
            L.bracket(RatVector(current.basis().row(a).transpose()),
                      RatVector(current.basis().row(b).transpose()))
                .transpose();
    Subspace next = sum(current, Subspace::span_rows(L.dim(), extra));
    if (next.dim() == current.dim()) return next;
    current = next;
  }
  return current;  // unreachable: dimension strictly increases per round
}

bool bracket_closed(const LieAlgebra& L, const Subspace& s) {
  for (Index a = 0; a < s.dim(); ++a)
    for (Index b = a + 1; b < s.dim(); ++b)
      if (!s.contains(L.bracket(RatVector(s.basis().row(a).transpose()),
                                RatVector(s.basis().row(b).transpose()))))
        return false;
  return true;
}

bool bracket_stable(const LieAlgebra& L, const Subspace& s) {
  for (Index i = 0; i < L.dim(); ++i)
    for (Index k = 0; k < s.dim(); ++k)
      if (!s.contains(L.bracket(unit_vector(L.dim(), i),
                                RatVector(s.basis().row(k).transpose()))))
        return false;
  return true;
}

bool LieHom::surjective() const {
  return rref(matrix).rank() == matrix.rows();
}

LieHom identity_hom(const LiePtr& L) {
  return {L, L, RatMatrix::Identity(L->dim(), L->dim())};
}

LieHom zero_hom(const LiePtr& source, const LiePtr& target) {
  return {source, target, RatMatrix::Zero(target->dim(), source->dim())};
}

LieHom compose(const LieHom& g, const LieHom& f) {
  if (g.matrix.cols() != f.matrix.rows())
    throw XmodError(ErrorKind::internal, "compose: shape mismatch");
  return {f.source, g.target, RatMatrix(g.matrix * f.matrix)};
}

Verdict hom_check(const LieHom& f) {
  Verdict v;
  const Index n = f.source->dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      RatVector lhs = f.apply(f.source->bracket_basis(i, j));
      RatVector rhs = f.target->bracket(RatVector(f.matrix.col(i)),
                                        RatVector(f.matrix.col(j)));
      if (!exactly_equal(lhs, rhs)) v.fail("bracket-preservation", {i, j});
    }
  return v;
}

Expected<LieQuotient> quotient_lie(const LiePtr& L, const Subspace& ideal,
                                   std::string name) {
  if (ideal.ambient() != L->dim())
    throw XmodError(ErrorKind::internal, "quotient_lie: ambient mismatch");
  for (Index i = 0; i < L->dim(); ++i)
    for (Index k = 0; k < ideal.dim(); ++k) {
      RatVector w = L->bracket(unit_vector(L->dim(), i),
                               RatVector(ideal.basis().row(k).transpose()));
      if (!ideal.contains(w))
        return Diagnostic{"not-an-ideal",
                          "bracket of basis " + std::to_string(i) +
                              " with ideal basis row " + std::to_string(k) +
                              " leaves the subspace"};
    }
  const QuotientMap q = quotient(L->dim(), ideal);
  std::vector<RatMatrix> ad(static_cast<std::size_t>(q.dim),
                            RatMatrix::Zero(q.dim, q.dim));
  for (Index a = 0; a < q.dim; ++a)
    for (Index b = 0; b < q.dim; ++b)
      ad[static_cast<std::size_t>(a)].col(b) =
          q.proj * L->bracket(RatVector(q.section.col(a)),
                              RatVector(q.section.col(b)));
  if (name.empty()) name = L->name() + "/I";
  auto quo = std::make_shared<LieAlgebra>(std::move(name), q.dim, std::move(ad));
  return LieQuotient{quo, LieHom{L, quo, q.proj}, q.section};
}

Expected<LieSub> restrict_lie(const LiePtr& L, const Subspace& sub,
                              std::string name) {
  const Index d = sub.dim();
  std::vector<RatMatrix> ad(static_cast<std::size_t>(d), RatMatrix::Zero(d, d));
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      RatVector w = L->bracket(RatVector(sub.basis().row(a).transpose()),
                               RatVector(sub.basis().row(b).transpose()));
      if (!sub.contains(w))
        return Diagnostic{"not-a-subalgebra",
                          "bracket of basis rows " + std::to_string(a) + "," +
                              std::to_string(b) + " leaves the subspace"};
      ad[static_cast<std::size_t>(a)].col(b) = sub.coords(w);
    }
  if (name.empty()) name = L->name() + "|sub";
  auto alg = std::make_shared<LieAlgebra>(std::move(name), d, std::move(ad));
  return LieSub{alg, LieHom{alg, L, RatMatrix(sub.basis().transpose())}};
}

LieSum direct_sum(const LiePtr& a, const LiePtr& b, std::string name) {
  const Index na = a->dim(), nb = b->dim(), n = na + nb;
  std::vector<RatMatrix> ad(static_cast<std::size_t>(n), RatMatrix::Zero(n, n));
  for (Index i = 0; i < na; ++i)
    ad[static_cast<std::size_t>(i)].topLeftCorner(na, na) = a->ad(i);
  for (Index i = 0; i < nb; ++i)
    ad[static_cast<std::size_t>(na + i)].bottomRightCorner(nb, nb) = b->ad(i);
  if (name.empty()) name = a->name() + "x" + b->name();
  auto s = std::make_shared<LieAlgebra>(std::move(name), n, std::move(ad));
  LieSum out;
  out.algebra = s;
  RatMatrix pl = RatMatrix::Zero(na, n), pr = RatMatrix::Zero(nb, n);
  pl.leftCols(na).setIdentity();
  pr.rightCols(nb).setIdentity();
  out.proj_left = {s, a, pl};
  out.proj_right = {s, b, pr};
  out.incl_left = {a, s, RatMatrix(pl.transpose())};
  out.incl_right = {b, s, RatMatrix(pr.transpose())};
  return out;
}

LieHom pair_hom(const LieSum& sum, const LieHom& f, const LieHom& g) {
  if (f.source->dim() != g.source->dim())
    throw XmodError(ErrorKind::internal, "pair_hom: source mismatch");
  RatMatrix m(sum.algebra->dim(), f.matrix.cols());
  m.topRows(f.matrix.rows()) = f.matrix;
  m.bottomRows(g.matrix.rows()) = g.matrix;
  return {f.source, sum.algebra, std::move(m)};
}

}  // namespace xmodlie
