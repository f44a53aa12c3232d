#pragma once

#include <string>
#include <vector>

#include "autos.hpp"
#include "unknowns.hpp"
#include "weil.hpp"

namespace weilab {

struct AnsatzUnknown {
  uint32_t var;             // which variable image this coefficient sits in
  std::size_t basis_index;  // position of the nilradical basis monomial
  bool linear_part;         // coefficient of a degree-1 monomial
};

// Fully general endomorphism ansatz: the image of each variable is a linear
// combination of the nilradical standard basis monomials with fresh unknown
// coefficients.
struct SymbolicEndo {
  const WeilAlgebra* algebra = nullptr;
  SymbolTable symbols;
  std::vector<AnsatzUnknown> unknown_info;  // indexed by symbol id
  std::vector<TPoly<UnknownPoly>> images;
};

SymbolicEndo general_ansatz(const WeilAlgebra& algebra);

// Polynomial equations on the ansatz coefficients expressing that every
// presentation relation is preserved.
struct ConstraintSystem {
  SymbolicEndo ansatz;
  std::vector<UnknownPoly> equations;
};

ConstraintSystem generate_constraints(const WeilAlgebra& algebra);

// Every equation vanishes and the linear-part matrix is non-singular.
// The assignment is indexed by symbol id and must cover all unknowns.
bool verify_assignment(const ConstraintSystem& cs,
                       const std::vector<Rational>& assignment);

// The concrete endomorphism an assignment describes.
Endo endo_from_assignment(const ConstraintSystem& cs,
                          const std::vector<Rational>& assignment);

// Coordinates of apply(ansatz, sum k_i b_i) - sum k_i b_i: one equation per
// standard basis coordinate, bilinear in the k_i and the ansatz unknowns.
struct FixedPointSystem {
  SymbolTable symbols;      // ansatz unknowns followed by k_1..k_dim
  uint32_t first_k_symbol;  // id of k_1
  std::vector<UnknownPoly> equations;
};

FixedPointSystem fixed_point_equations(const WeilAlgebra& algebra,
                                       const ConstraintSystem& cs);

// One `0 = <polynomial>` line per equation, byte-stable.
std::string export_constraints(const ConstraintSystem& cs);

}  // namespace weilab
