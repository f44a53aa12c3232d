#pragma once

#include <vector>

#include "autos.hpp"
#include "weil.hpp"

namespace weilab {

// A derivation of A, determined by its values on the variable classes.
struct Derivation {
  const WeilAlgebra* algebra = nullptr;
  std::vector<Element> images;  // D(x_i)
  QMatrix matrix;               // induced map on A over the standard basis
};

// Basis of the space of derivations of A. The values D(x_i) are solved from
// the linear constraints that every presentation relation (each ideal
// generator and each monomial of degree r+1) is respected.
std::vector<Derivation> derivation_space(const WeilAlgebra& algebra);

// Joint kernel of a derivation basis: the fixed space of the connected
// identity component of Aut(A).
Subspace derivation_kernel(const WeilAlgebra& algebra);
Subspace joint_kernel(const WeilAlgebra& algebra,
                      const std::vector<Derivation>& basis);

enum class FixedStatus { TrivialCertified, UpperBoundOnly };

// K = fixed space of the identity component; K' = K cut down by the granted
// sign-diagonal automorphisms. SA is always contained in K'.
struct FixedPointEstimate {
  Subspace kernel;         // K
  Subspace refined;        // K'
  FixedStatus status = FixedStatus::UpperBoundOnly;
};

FixedPointEstimate fixed_subalgebra_estimate(const WeilAlgebra& algebra);

// True iff S contains the unit class and is closed under multiplication.
bool verify_subalgebra(const WeilAlgebra& algebra, const Subspace& s);

// Matrix of the derivation with the given generator values, via the Leibniz
// rule on standard monomials.
QMatrix derivation_matrix(const WeilAlgebra& algebra,
                          const std::vector<Element>& images);

}  // namespace weilab
