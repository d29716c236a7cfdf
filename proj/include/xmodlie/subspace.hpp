#pragma once

// Subspaces of Q^n in a single normal form: the canonical RREF basis, one
// basis vector per row. Equality of subspaces is matrix equality of bases.

#include <vector>

#include "xmodlie/linalg.hpp"

namespace xmodlie {

class Subspace {
 public:
  Subspace() : Subspace(0) {}

  /// The zero subspace of Q^ambient.
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Canonicalizes the row span of `rows` (zero rows dropped).
  static Subspace span_rows(Index ambient, const RatMatrix& rows);

  static Subspace full(Index ambient);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// dim x ambient, canonical RREF.
  const RatMatrix& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// v minus its row-space component; zero iff v lies in the subspace.
  RatVector reduce(RatVector v) const;

  bool contains(const RatVector& v) const { return is_zero_vec(reduce(v)); }
  bool contains(const Subspace& other) const;

  /// Coordinates of a member vector in the RREF basis (entries at the pivot
  /// columns). Precondition: contains(v).
  RatVector coords(const RatVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && exactly_equal(a.basis_, b.basis_);
  }

 private:
  static bool is_zero_vec(const RatVector& v) { return xmodlie::is_zero(v); }

  Index ambient_;
  RatMatrix basis_;
  std::vector<Index> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);

/// Zassenhaus: row reduce [A A; B 0] and read the intersection off the
/// right half of the rows whose left half vanished.
Subspace intersect(const Subspace& a, const Subspace& b);

/// {x : m x = 0} as a canonical subspace of Q^cols(m).
Subspace kernel_basis(const RatMatrix& m);

/// Row space of m (the image of x -> x^T m, i.e. column space of m^T).
Subspace row_space(const RatMatrix& m);

/// Column space of m as a subspace of Q^rows(m).
Subspace column_space(const RatMatrix& m);

/// Linear data of Q^ambient / w: proj is (ambient - dim w) x ambient with
/// kernel exactly w, and proj * section is the identity on the quotient.
/// The section embeds quotient coordinates at the non-pivot columns of w.
struct QuotientMap {
  RatMatrix proj;
  RatMatrix section;
  Index dim;
};

QuotientMap quotient(Index ambient, const Subspace& w);

}  // namespace xmodlie
