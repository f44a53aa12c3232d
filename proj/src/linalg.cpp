#include "linalg.hpp"

#include <algorithm>

#include "errors.hpp"

namespace weilab {

Subspace rref(std::size_t cols, std::vector<QVec> rows) {
  // pivot on the grlex-largest (highest-index) coordinate first, so that
  // reduction rewrites the largest monomial of a relation in terms of
  // smaller ones; the standard complement then matches the usual quotient
  // basis convention
  std::vector<std::size_t> priority(cols);
  for (std::size_t i = 0; i < cols; ++i) priority[i] = cols - 1 - i;
  return rref(cols, std::move(rows), priority);
}

Subspace rref(std::size_t cols, std::vector<QVec> rows,
              const std::vector<std::size_t>& pivot_priority) {
  for (const auto& r : rows)
    if (r.size() != cols) throw UsageError("rref: row length mismatch");
  if (pivot_priority.size() != cols)
    throw UsageError("rref: pivot priority length mismatch");

  Subspace out;
  out.cols = cols;
  std::size_t rank = 0;
  for (std::size_t c : pivot_priority) {
    if (rank >= rows.size()) break;
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = rows[rank][c];
    for (std::size_t j = 0; j < cols; ++j) rows[rank][j] /= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] -= f * rows[rank][j];
    }
    out.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  // present rows by increasing pivot (the unit class first)
  std::vector<std::size_t> perm(rank);
  for (std::size_t i = 0; i < rank; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return out.pivots[a] < out.pivots[b];
  });
  Subspace sorted;
  sorted.cols = cols;
  for (std::size_t i : perm) {
    sorted.basis.push_back(std::move(rows[i]));
    sorted.pivots.push_back(out.pivots[i]);
  }
  return sorted;
}

QVec reduce(const Subspace& s, QVec v) {
  if (v.size() != s.cols) throw UsageError("reduce: vector length mismatch");
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    const Rational& f = v[s.pivots[i]];
    if (f.is_zero()) continue;
    Rational c = f;
    const QVec& row = s.basis[i];
    for (std::size_t j = 0; j < s.cols; ++j) v[j] -= c * row[j];
  }
  return v;
}

bool contains(const Subspace& s, const QVec& v) {
  QVec res = reduce(s, v);
  for (const auto& x : res)
    if (!x.is_zero()) return false;
  return true;
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  if (a.cols != b.cols) throw UsageError("subspace_leq: dimension mismatch");
  for (const auto& v : a.basis)
    if (!contains(b, v)) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.cols != b.cols) throw UsageError("sum: dimension mismatch");
  std::vector<QVec> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return rref(a.cols, std::move(rows));
}

Subspace kernel(std::size_t cols, const std::vector<QVec>& rows) {
  Subspace m = rref(cols, rows);
  // free columns parametrize the null space
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : m.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < m.basis.size(); ++i)
      v[m.pivots[i]] = -m.basis[i][free];
    basis.push_back(std::move(v));
  }
  return rref(cols, std::move(basis));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.cols != b.cols) throw UsageError("intersect: dimension mismatch");
  std::size_t na = a.dim(), nb = b.dim();
  // solve c*A - d*B = 0 over the stacked coefficient vector (c, d)
  std::vector<QVec> eqs;
  for (std::size_t col = 0; col < a.cols; ++col) {
    QVec row(na + nb, Rational(0));
    bool nonzero = false;
    for (std::size_t i = 0; i < na; ++i) {
      row[i] = a.basis[i][col];
      nonzero = nonzero || !row[i].is_zero();
    }
    for (std::size_t i = 0; i < nb; ++i) {
      row[na + i] = -b.basis[i][col];
      nonzero = nonzero || !row[na + i].is_zero();
    }
    if (nonzero) eqs.push_back(std::move(row));
  }
  Subspace sols = kernel(na + nb, eqs);
  std::vector<QVec> vecs;
  for (const auto& cd : sols.basis) {
    QVec v(a.cols, Rational(0));
    for (std::size_t i = 0; i < na; ++i) {
      if (cd[i].is_zero()) continue;
      for (std::size_t col = 0; col < a.cols; ++col)
        v[col] += cd[i] * a.basis[i][col];
    }
    vecs.push_back(std::move(v));
  }
  return rref(a.cols, std::move(vecs));
}

std::vector<std::size_t> non_pivot_columns(const Subspace& s) {
  std::vector<bool> is_pivot(s.cols, false);
  for (std::size_t p : s.pivots) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.cols; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

QMatrix mat_identity(std::size_t n) {
  QMatrix m(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  std::size_t n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
  QMatrix out(n, QVec(q, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < q; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

QMatrix mat_sub(const QMatrix& a, const QMatrix& b) {
  QMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

bool mat_is_zero(const QMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

Rational mat_det(QMatrix a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace weilab
