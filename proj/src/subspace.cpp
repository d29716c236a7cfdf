#include "xmodlie/subspace.hpp"

namespace xmodlie {

Subspace Subspace::span_rows(Index ambient, const RatMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw XmodError(ErrorKind::internal, "span_rows: ambient mismatch");
  Subspace s(ambient);
  if (rows.rows() == 0) return s;
  auto red = rref(rows);
  s.basis_ = red.mat.topRows(red.rank());
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::full(Index ambient) {
  RatMatrix id = RatMatrix::Identity(ambient, ambient);
  return span_rows(ambient, id);
}

RatVector Subspace::reduce(RatVector v) const {
  if (v.rows() != ambient_)
    throw XmodError(ErrorKind::internal, "reduce: ambient mismatch");
  for (Index k = 0; k < dim(); ++k) {
    const Rational c = v(pivots_[static_cast<std::size_t>(k)]);
    if (c != 0) v -= c * basis_.row(k).transpose();
  }
  return v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (Index k = 0; k < other.dim(); ++k)
    if (!contains(RatVector(other.basis_.row(k).transpose()))) return false;
  return true;
}

RatVector Subspace::coords(const RatVector& v) const {
  RatVector c(dim());
  for (Index k = 0; k < dim(); ++k)
    c(k) = v(pivots_[static_cast<std::size_t>(k)]);
  return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw XmodError(ErrorKind::internal, "sum: ambient mismatch");
  RatMatrix stacked(a.dim() + b.dim(), a.ambient());
  stacked.topRows(a.dim()) = a.basis();
  stacked.bottomRows(b.dim()) = b.basis();
  return Subspace::span_rows(a.ambient(), stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw XmodError(ErrorKind::internal, "intersect: ambient mismatch");
  const Index n = a.ambient();
  RatMatrix z(a.dim() + b.dim(), 2 * n);
  z.setZero();
  z.block(0, 0, a.dim(), n) = a.basis();
  z.block(0, n, a.dim(), n) = a.basis();
  z.block(a.dim(), 0, b.dim(), n) = b.basis();
  const auto red = rref(z);
  RatMatrix meet(red.rank(), n);
  Index count = 0;
  for (Index r = 0; r < red.rank(); ++r) {
    if (!is_zero(red.mat.row(r).head(n)))
      continue;
    meet.row(count++) = red.mat.row(r).tail(n);
  }
  return Subspace::span_rows(n, meet.topRows(count));
}

Subspace kernel_basis(const RatMatrix& m) {
  return Subspace::span_rows(m.cols(), nullspace_rows(m));
}

Subspace row_space(const RatMatrix& m) {
  return Subspace::span_rows(m.cols(), m);
}

Subspace column_space(const RatMatrix& m) {
  return Subspace::span_rows(m.rows(), m.transpose());
}

QuotientMap quotient(Index ambient, const Subspace& w) {
  if (w.ambient() != ambient)
    throw XmodError(ErrorKind::internal, "quotient: ambient mismatch");
  const Index r = w.dim();
  const Index q = ambient - r;
  std::vector<Index> free_cols;
  free_cols.reserve(static_cast<std::size_t>(q));
  {
    std::size_t k = 0;
    for (Index c = 0; c < ambient; ++c) {
      if (k < w.pivots().size() && w.pivots()[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  QuotientMap out{RatMatrix(q, ambient), RatMatrix(ambient, q), q};
  out.proj.setZero();
  out.section.setZero();
  for (Index k = 0; k < q; ++k) {
    const Index f = free_cols[static_cast<std::size_t>(k)];
    out.section(f, k) = 1;
    out.proj(k, f) = 1;
    for (Index j = 0; j < r; ++j)
      out.proj(k, w.pivots()[static_cast<std::size_t>(j)]) = -w.basis()(j, f);
  }
  return out;
}

}  // namespace xmodlie
