#pragma once

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace weilab {

using QVec = std::vector<Rational>;

// An exact subspace of Q^cols kept in canonical reduced row-echelon form:
// pivots are chosen at the largest column of each row (so reduction rewrites
// the grlex-largest monomial in terms of smaller ones); rows are listed by
// increasing pivot, each pivot entry 1, pivot columns otherwise
// zero. Equal subspaces have identical bases.
struct Subspace {
  std::size_t cols = 0;
  std::vector<QVec> basis;         // RREF rows
  std::vector<std::size_t> pivots;  // one per row, strictly increasing

  std::size_t dim() const { return basis.size(); }
  bool operator==(const Subspace& o) const {
    return cols == o.cols && basis == o.basis;
  }
};

// Canonical RREF span of the given rows. The optional priority lists column
// indices in the order they should be preferred as pivots; the default
// prefers the highest column index (the grlex-largest monomial).
Subspace rref(std::size_t cols, std::vector<QVec> rows);
Subspace rref(std::size_t cols, std::vector<QVec> rows,
              const std::vector<std::size_t>& pivot_priority);

// Residual of v after elimination against the RREF basis; zero iff v in S.
QVec reduce(const Subspace& s, QVec v);

bool contains(const Subspace& s, const QVec& v);

// True iff every vector of a lies in b.
bool subspace_leq(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);

Subspace intersect(const Subspace& a, const Subspace& b);

// Null space {x : M x = 0} of the matrix with the given rows over Q^cols.
Subspace kernel(std::size_t cols, const std::vector<QVec>& rows);

// Column indices of Q^cols that are not pivots of s.
std::vector<std::size_t> non_pivot_columns(const Subspace& s);

// Matrix helpers used by the automorphism and derivation modules. Matrices
// are dense row-major vectors of rows.
using QMatrix = std::vector<QVec>;

QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QMatrix mat_identity(std::size_t n);
QMatrix mat_sub(const QMatrix& a, const QMatrix& b);
bool mat_is_zero(const QMatrix& a);
Rational mat_det(QMatrix a);

}  // namespace weilab
