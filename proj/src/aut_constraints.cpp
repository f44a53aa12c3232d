#include "aut_constraints.hpp"

#include "errors.hpp"

namespace weilab {

SymbolicEndo general_ansatz(const WeilAlgebra& A) {
  SymbolicEndo ansatz;
  ansatz.algebra = &A;
  const RingContext& ctx = *A.context();
  for (uint32_t i = 0; i < ctx.num_vars(); ++i) {
    TPoly<UnknownPoly> image(A.context());
    for (std::size_t b = 0; b < A.basis().size(); ++b) {
      const Monomial& m = A.basis()[b];
      if (m.degree() == 0) continue;  // the unit is fixed
      uint32_t id = ansatz.symbols.add(
          "a_" + std::to_string(i + 1) + "_" + render_monomial(ctx, m));
      ansatz.unknown_info.push_back({i, b, m.degree() == 1});
      image.set(m, UnknownPoly::symbol(id));
    }
    ansatz.images.push_back(std::move(image));
  }
  return ansatz;
}

// Reduces an unknown-coefficient polynomial against the (rational) ideal
// basis and returns its standard-basis coordinates.
static std::vector<UnknownPoly> reduce_symbolic(const WeilAlgebra& A,
                                                const TPoly<UnknownPoly>& p) {
  const Subspace& ideal = A.ideal();
  std::vector<UnknownPoly> v(ideal.cols);
  for (const auto& [m, c] : p.terms()) v[A.context()->index_of(m)] = c;
  for (std::size_t i = 0; i < ideal.basis.size(); ++i) {
    UnknownPoly f = v[ideal.pivots[i]];
    if (f.is_zero()) continue;
    const QVec& row = ideal.basis[i];
    for (std::size_t j = 0; j < ideal.cols; ++j) {
      if (row[j].is_zero()) continue;
      v[j] = v[j] - f * UnknownPoly(row[j]);
    }
  }
  std::vector<UnknownPoly> coords;
  for (std::size_t col : non_pivot_columns(ideal)) coords.push_back(v[col]);
  return coords;
}

ConstraintSystem generate_constraints(const WeilAlgebra& A) {
  ConstraintSystem cs;
  cs.ansatz = general_ansatz(A);
  for (const auto& gen : A.spec().generators) {
    TPoly<UnknownPoly> lifted(A.context());
    for (const auto& [m, c] : gen.terms()) lifted.set(m, UnknownPoly(c));
    TPoly<UnknownPoly> image = lifted.substitute(cs.ansatz.images);
    for (auto& eq : reduce_symbolic(A, image))
      if (!eq.is_zero()) cs.equations.push_back(std::move(eq));
  }
  // the degree-(r+1) relations substitute to products of r+1 nilpotent
  // images, which vanish under truncation and contribute no equations
  return cs;
}

bool verify_assignment(const ConstraintSystem& cs,
                       const std::vector<Rational>& assignment) {
  if (assignment.size() < cs.ansatz.symbols.size())
    throw UsageError("assignment does not cover all unknowns");
  for (const auto& eq : cs.equations)
    if (!eq.evaluate(assignment).is_zero()) return false;
  const WeilAlgebra& A = *cs.ansatz.algebra;
  // linear part over the surviving degree-1 monomials
  std::vector<std::size_t> deg1;
  for (std::size_t b = 0; b < A.basis().size(); ++b)
    if (A.basis()[b].degree() == 1) deg1.push_back(b);
  QMatrix lin(deg1.size(), QVec(deg1.size(), Rational(0)));
  for (uint32_t id = 0; id < cs.ansatz.symbols.size(); ++id) {
    const AnsatzUnknown& info = cs.ansatz.unknown_info[id];
    if (!info.linear_part) continue;
    for (std::size_t row = 0; row < deg1.size(); ++row)
      if (deg1[row] == info.basis_index) {
        // column: position of the variable among surviving variables
        for (std::size_t col = 0; col < deg1.size(); ++col) {
          const Monomial& m = A.basis()[deg1[col]];
          if (m.exponents[info.var] == 1) lin[row][col] = assignment[id];
        }
      }
  }
  return !mat_det(lin).is_zero();
}

Endo endo_from_assignment(const ConstraintSystem& cs,
                          const std::vector<Rational>& assignment) {
  const WeilAlgebra& A = *cs.ansatz.algebra;
  std::vector<Element> images(A.context()->num_vars(), A.zero());
  for (uint32_t id = 0; id < cs.ansatz.symbols.size(); ++id) {
    const AnsatzUnknown& info = cs.ansatz.unknown_info[id];
    images[info.var].coords[info.basis_index] += assignment[id];
  }
  return Endo(A, std::move(images));
}

FixedPointSystem fixed_point_equations(const WeilAlgebra& A,
                                       const ConstraintSystem& cs) {
  FixedPointSystem fp;
  fp.symbols = cs.ansatz.symbols;
  fp.first_k_symbol = static_cast<uint32_t>(fp.symbols.size());
  std::size_t n = A.dim();
  std::vector<uint32_t> ks;
  for (std::size_t i = 0; i < n; ++i)
    ks.push_back(fp.symbols.add("k_" + std::to_string(i + 1)));

  // coordinates of the ansatz image of each basis monomial
  std::vector<std::vector<UnknownPoly>> image_coords;
  for (std::size_t j = 0; j < n; ++j) {
    TPoly<UnknownPoly> bj(A.context());
    bj.set(A.basis()[j], UnknownPoly(1));
    image_coords.push_back(
        reduce_symbolic(A, bj.substitute(cs.ansatz.images)));
  }

  for (std::size_t t = 0; t < n; ++t) {
    UnknownPoly eq;
    for (std::size_t j = 0; j < n; ++j) {
      UnknownPoly contrib = image_coords[j][t];
      if (t == j) contrib = contrib - UnknownPoly(1);
      if (!contrib.is_zero())
        eq += UnknownPoly::symbol(ks[j]) * contrib;
    }
    if (!eq.is_zero()) fp.equations.push_back(std::move(eq));
  }
  return fp;
}

std::string export_constraints(const ConstraintSystem& cs) {
  std::string out;
  for (const auto& eq : cs.equations)
    out += "0 = " + eq.render(cs.ansatz.symbols) + "\n";
  return out;
}

}  // namespace weilab
