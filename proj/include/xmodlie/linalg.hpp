#pragma once

// Exact dense linear algebra over an exact field scalar. Everything here is
// a pure function; reduction is plain Gauss-Jordan to the unique canonical
// reduced row echelon form (leftmost pivots, pivots scaled to 1). With an
// exact scalar there is no pivoting strategy to choose and no tolerance
// anywhere.

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <optional>
#include <vector>

#include "xmodlie/rational.hpp"

namespace xmodlie {

using Index = Eigen::Index;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Scalar>
struct RrefResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> mat;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Canonical reduced row echelon form. Deterministic: pivots are the
/// leftmost nonzero columns top-down, scaled to 1, cleared above and below.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index hit = -1;
    for (Index i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        hit = i;
        break;
      }
    if (hit < 0) continue;
    if (hit != row) m.row(hit).swap(m.row(row));
    const Scalar pivot = m(row, col);  // copy: the row scale writes through
    m.row(row) /= pivot;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar factor = m(i, col);
      m.row(i) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Nullspace basis as rows, one per free column, in free-column order.
/// Not canonicalized; Subspace::span_rows does that.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
nullspace_rows(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(m);
  const Index n = m.cols();
  std::vector<Index> free_cols;
  {
    std::size_t k = 0;
    for (Index c = 0; c < n; ++c) {
      if (k < red.pivots.size() && red.pivots[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> rows(
      static_cast<Index>(free_cols.size()), n);
  rows.setZero();
  for (Index r = 0; r < rows.rows(); ++r) {
    const Index f = free_cols[static_cast<std::size_t>(r)];
    rows(r, f) = Scalar(1);
    for (Index k = 0; k < red.rank(); ++k)
      rows(r, red.pivots[static_cast<std::size_t>(k)]) = -red.mat(k, f);
  }
  return rows;
}

/// Canonical solution of m x = y with every free variable set to 0, or
/// nullopt when y is outside the image of m.
template <typename Derived>
std::optional<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>>
preimage(const Eigen::MatrixBase<Derived>& m,
         const Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>& y) {
  using Scalar = typename Derived::Scalar;
  if (y.rows() != m.rows())
    throw XmodError(ErrorKind::internal, "preimage: shape mismatch");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> aug(m.rows(),
                                                            m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = y;
  const auto red = rref(aug);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(m.cols());
  x.setZero();
  for (Index k = 0; k < red.rank(); ++k) {
    const Index p = red.pivots[static_cast<std::size_t>(k)];
    if (p == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
    x(p) = red.mat(k, m.cols());
  }
  return x;
}

/// Column-wise right inverse of a surjective matrix, built from canonical
/// preimages of the target basis vectors (free variables zeroed).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
right_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sec(m.cols(), m.rows());
  for (Index k = 0; k < m.rows(); ++k) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> e(m.rows());
    e.setZero();
    e(k) = Scalar(1);
    auto x = preimage(m, e);
    if (!x)
      throw XmodError(ErrorKind::internal, "right_inverse: matrix not surjective");
    sec.col(k) = *x;
  }
  return sec;
}

/// vec(x (x) y) in row-major symbol order: entry i*dim(y)+j = x_i y_j.
inline RatVector kron(const RatVector& x, const RatVector& y) {
  RatVector out(x.rows() * y.rows());
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < y.rows(); ++j) out(i * y.rows() + j) = x(i) * y(j);
  return out;
}

/// Kronecker product of matrices, compatible with kron on vectors:
/// kron_matrix(A, B) * kron(x, y) = kron(A x, B y).
inline RatMatrix kron_matrix(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline RatVector unit_vector(Index dim, Index k) {
  RatVector e(dim);
  e.setZero();
  e(k) = 1;
  return e;
}

}  // namespace xmodlie
