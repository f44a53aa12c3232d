#pragma once

#include <optional>
#include <vector>

#include "weil.hpp"

namespace weilab {

// An algebra endomorphism of A given by the images of the k variable
// classes; the unit is implicitly fixed.
class Endo {
 public:
  Endo(const WeilAlgebra& algebra, std::vector<Element> images);

  const WeilAlgebra& algebra() const { return *alg_; }
  const std::vector<Element>& images() const { return images_; }

  // True iff every generator maps into the ideal and every image is
  // nilpotent (zero unit coordinate).
  bool is_well_defined() const;

  // Induced matrix on n/n^2 over the surviving degree-1 classes; k x k in
  // the standard width-k case.
  QMatrix linear_part() const;

  // Well-defined with invertible linear part; on a local finite-dimensional
  // algebra this implies bijectivity.
  bool is_automorphism() const;
  bool is_orientation_preserving() const;
  bool is_unipotent() const;

  Element apply(const Element& a) const;

  // Matrix of the induced map on A over the standard basis.
  const QMatrix& matrix() const;

  // Composition this ∘ other, via substitution.
  Endo compose(const Endo& other) const;

  static Endo identity(const WeilAlgebra& algebra);

 private:
  const WeilAlgebra* alg_;
  std::vector<Element> images_;
  std::vector<TruncPoly> image_polys_;
  mutable std::optional<bool> well_defined_;
  mutable std::optional<QMatrix> matrix_;
};

// The well-defined diagonal maps x_i -> eps_i * x_i over all sign vectors
// eps in {-1, 1}^k; always contains the identity.
std::vector<Endo> sign_diagonal_automorphisms(const WeilAlgebra& algebra);

// Intersection of the fixed spaces of the given endomorphisms, as a
// subspace of A's coordinate space; the full space for an empty list.
Subspace fixed_subspace(const WeilAlgebra& algebra,
                        const std::vector<Endo>& endos);

}  // namespace weilab
