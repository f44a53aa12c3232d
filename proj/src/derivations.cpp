#include "derivations.hpp"

#include "errors.hpp"

namespace weilab {

// dim x dim matrix of multiplication by c.
static QMatrix multiplication_matrix(const WeilAlgebra& A, const Element& c) {
  std::size_t n = A.dim();
  QMatrix m(n, QVec(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    Element bj = A.zero();
    bj.coords[j] = 1;
    Element prod = A.multiply(c, bj);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = prod.coords[i];
  }
  return m;
}

QMatrix derivation_matrix(const WeilAlgebra& A,
                          const std::vector<Element>& images) {
  const RingContext& ctx = *A.context();
  std::size_t n = A.dim();
  uint32_t k = ctx.num_vars();
  QMatrix m(n, QVec(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    const Monomial& b = A.basis()[j];
    Element val = A.zero();
    for (uint32_t i = 0; i < k; ++i) {
      if (b.exponents[i] == 0) continue;
      Monomial reduced{b.exponents};
      --reduced.exponents[i];
      Element factor = A.from_coords(A.monomial_class(ctx.index_of(reduced)));
      Element term = A.multiply(factor, images[i]);
      Rational mult(b.exponents[i]);
      for (std::size_t t = 0; t < n; ++t)
        val.coords[t] += mult * term.coords[t];
    }
    for (std::size_t i = 0; i < n; ++i) m[i][j] = val.coords[i];
  }
  return m;
}

std::vector<Derivation> derivation_space(const WeilAlgebra& A) {
  const RingContext& ctx = *A.context();
  std::size_t n = A.dim();
  uint32_t k = ctx.num_vars();
  std::size_t unknowns = static_cast<std::size_t>(k) * n;

  // constraint coefficients: NF(dQ/dx_i) for every relation Q
  std::vector<std::vector<Element>> relation_grads;
  for (const auto& gen : A.spec().generators) {
    std::vector<Element> grads;
    for (uint32_t i = 0; i < k; ++i)
      grads.push_back(A.normal_form(gen.partial_derivative(i)));
    relation_grads.push_back(std::move(grads));
  }
  // monomials of degree r+1 generate the truncation relations; their
  // derivatives live at degree r
  for (const auto& m : monomials_of_degree(k, ctx.order() + 1)) {
    std::vector<Element> grads;
    for (uint32_t i = 0; i < k; ++i) {
      if (m.exponents[i] == 0) {
        grads.push_back(A.zero());
        continue;
      }
      Monomial d{m.exponents};
      --d.exponents[i];
      Element g = A.from_coords(A.monomial_class(ctx.index_of(d)));
      Rational mult(m.exponents[i]);
      for (auto& c : g.coords) c *= mult;
      grads.push_back(std::move(g));
    }
    relation_grads.push_back(std::move(grads));
  }

  std::vector<QVec> rows;
  for (const auto& grads : relation_grads) {
    // sum_i mult_matrix(grads[i]) * D_i must vanish; one equation per
    // basis coordinate
    std::vector<QMatrix> mats;
    for (uint32_t i = 0; i < k; ++i)
      mats.push_back(multiplication_matrix(A, grads[i]));
    for (std::size_t t = 0; t < n; ++t) {
      QVec row(unknowns, Rational(0));
      bool nonzero = false;
      for (uint32_t i = 0; i < k; ++i)
        for (std::size_t s = 0; s < n; ++s) {
          row[static_cast<std::size_t>(i) * n + s] = mats[i][t][s];
          nonzero = nonzero || !mats[i][t][s].is_zero();
        }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  Subspace sols = kernel(unknowns, rows);
  std::vector<Derivation> basis;
  for (const auto& v : sols.basis) {
    Derivation d;
    d.algebra = &A;
    for (uint32_t i = 0; i < k; ++i) {
      QVec coords(v.begin() + static_cast<std::ptrdiff_t>(i) * n,
                  v.begin() + static_cast<std::ptrdiff_t>(i + 1) * n);
      d.images.push_back(A.from_coords(std::move(coords)));
    }
    d.matrix = derivation_matrix(A, d.images);
    basis.push_back(std::move(d));
  }
  return basis;
}

Subspace joint_kernel(const WeilAlgebra& A,
                      const std::vector<Derivation>& basis) {
  std::vector<QVec> rows;
  for (const auto& d : basis)
    for (const auto& row : d.matrix) {
      bool nonzero = false;
      for (const auto& x : row) nonzero = nonzero || !x.is_zero();
      if (nonzero) rows.push_back(row);
    }
  return kernel(A.dim(), rows);
}

Subspace derivation_kernel(const WeilAlgebra& A) {
  return joint_kernel(A, derivation_space(A));
}

FixedPointEstimate fixed_subalgebra_estimate(const WeilAlgebra& A) {
  FixedPointEstimate est;
  est.kernel = derivation_kernel(A);
  Subspace signs = fixed_subspace(A, sign_diagonal_automorphisms(A));
  est.refined = intersect(est.kernel, signs);
  est.status = (est.refined == A.unit_span()) ? FixedStatus::TrivialCertified
                                              : FixedStatus::UpperBoundOnly;
  return est;
}

bool verify_subalgebra(const WeilAlgebra& A, const Subspace& s) {
  QVec unit(A.dim(), Rational(0));
  unit[0] = 1;
  if (!contains(s, unit)) return false;
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    for (std::size_t j = i; j < s.basis.size(); ++j) {
      Element prod = A.multiply(A.from_coords(s.basis[i]),
                                A.from_coords(s.basis[j]));
      if (!contains(s, prod.coords)) return false;
    }
  return true;
}

}  // namespace weilab
