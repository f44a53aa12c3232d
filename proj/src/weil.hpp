#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace weilab {

// Presentation A = D^r_k / <P_1, ..., P_l>.
struct AlgebraSpec {
  std::string name;
  ContextPtr ctx;
  std::vector<TruncPoly> generators;
};

// Parses the plain-text algebra spec format:
//   vars: x y
//   order: 4
//   gen: x^2*y + y^4
// '#' starts a comment, blank lines are ignored.
AlgebraSpec parse_algebra_spec(const std::string& text, const std::string& name);
AlgebraSpec load_algebra_spec(const std::string& path);

class WeilAlgebra;

// An element of A in coordinates over the standard monomial basis.
struct Element {
  const WeilAlgebra* algebra = nullptr;
  QVec coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const Element& o) const { return coords == o.coords; }
};

// The span of { M * P_j truncated at degree r } over all monomials M of
// degree <= r; equals the ideal generated by the P_j inside D^r_k.
Subspace ideal_closure(const AlgebraSpec& spec);

// The quotient D^r_k / I with its standard monomial basis and precomputed
// normal forms of all ambient monomials (the structure constants).
class WeilAlgebra {
 public:
  static WeilAlgebra build(AlgebraSpec spec,
                           std::size_t dim_cap = default_dim_cap());
  static std::size_t default_dim_cap();

  const AlgebraSpec& spec() const { return spec_; }
  const ContextPtr& context() const { return spec_.ctx; }
  const Subspace& ideal() const { return ideal_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  // true when every generator lies in m^2 (the width-k case of the theory)
  bool ideal_in_m_squared() const { return ideal_in_m2_; }

  Element zero() const { return Element{this, QVec(dim(), Rational(0))}; }
  Element one() const;
  // class of the i-th variable (0-based)
  Element variable_class(uint32_t i) const;
  Element from_coords(QVec coords) const;

  Element normal_form(const TruncPoly& p) const;
  // normal form of the ambient monomial with the given context index
  const QVec& monomial_class(std::size_t mono_index) const {
    return mono_nf_[mono_index];
  }

  Element multiply(const Element& a, const Element& b) const;
  // a representative polynomial (support on standard monomials)
  TruncPoly representative(const Element& a) const;
  std::string render(const Element& a) const;

  Subspace nilradical_power(uint32_t n) const;
  uint32_t order() const;
  uint32_t width() const;
  Subspace socle() const;
  Subspace ma_subalgebra() const;
  // span{1} as a subspace of the coordinate space
  Subspace unit_span() const;

 private:
  AlgebraSpec spec_;
  Subspace ideal_;                 // over the ambient monomial coordinates
  std::vector<Monomial> basis_;    // standard monomials, grlex order
  std::vector<std::size_t> basis_cols_;  // their ambient indices
  std::vector<QVec> mono_nf_;      // ambient monomial -> basis coordinates
  bool ideal_in_m2_ = true;
};

}  // namespace weilab
