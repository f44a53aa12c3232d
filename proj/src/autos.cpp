#include "autos.hpp"

#include "errors.hpp"

namespace weilab {

Endo::Endo(const WeilAlgebra& algebra, std::vector<Element> images)
    : alg_(&algebra), images_(std::move(images)) {
  if (images_.size() != algebra.context()->num_vars())
    throw UsageError("Endo: expected " +
                     std::to_string(algebra.context()->num_vars()) +
                     " images");
  for (const auto& im : images_) {
    if (im.algebra != alg_)
      throw ContextMismatch("Endo: image from a different algebra");
    image_polys_.push_back(algebra.representative(im));
  }
}

Endo Endo::identity(const WeilAlgebra& algebra) {
  std::vector<Element> images;
  for (uint32_t i = 0; i < algebra.context()->num_vars(); ++i)
    images.push_back(algebra.variable_class(i));
  return Endo(algebra, std::move(images));
}

bool Endo::is_well_defined() const {
  if (well_defined_) return *well_defined_;
  bool ok = true;
  // images must be nilpotent, or the substitution does not respect m^{r+1}
  for (const auto& im : images_)
    if (!im.coords[0].is_zero()) ok = false;
  if (ok) {
    for (const auto& gen : alg_->spec().generators) {
      Element res = alg_->normal_form(gen.substitute(image_polys_));
      if (!res.is_zero()) {
        ok = false;
        break;
      }
    }
  }
  well_defined_ = ok;
  return ok;
}

QMatrix Endo::linear_part() const {
  const RingContext& ctx = *alg_->context();
  // surviving degree-1 standard monomials index n/n^2
  std::vector<std::size_t> deg1;  // positions in the standard basis
  std::vector<uint32_t> deg1_var;
  for (std::size_t b = 0; b < alg_->basis().size(); ++b) {
    if (alg_->basis()[b].degree() != 1) continue;
    deg1.push_back(b);
    for (uint32_t v = 0; v < ctx.num_vars(); ++v)
      if (alg_->basis()[b].exponents[v] == 1) deg1_var.push_back(v);
  }
  QMatrix m(deg1.size(), QVec(deg1.size(), Rational(0)));
  for (std::size_t j = 0; j < deg1.size(); ++j) {
    const Element& im = images_[deg1_var[j]];
    for (std::size_t i = 0; i < deg1.size(); ++i)
      m[i][j] = im.coords[deg1[i]];
  }
  return m;
}

bool Endo::is_automorphism() const {
  return is_well_defined() && !mat_det(linear_part()).is_zero();
}

bool Endo::is_orientation_preserving() const {
  if (!is_automorphism())
    throw UsageError("orientation is defined for automorphisms only");
  return mat_det(linear_part()) > 0;
}

const QMatrix& Endo::matrix() const {
  if (matrix_) return *matrix_;
  std::size_t n = alg_->dim();
  QMatrix m(n, QVec(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    TruncPoly bj =
        TruncPoly::monomial(alg_->context(), alg_->basis()[j], Rational(1));
    Element im = alg_->normal_form(bj.substitute(image_polys_));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = im.coords[i];
  }
  matrix_ = std::move(m);
  return *matrix_;
}

bool Endo::is_unipotent() const {
  if (!is_automorphism())
    throw UsageError("unipotence is defined for automorphisms only");
  std::size_t n = alg_->dim();
  QMatrix nil = mat_sub(mat_identity(n), matrix());
  // raise to a power >= n by squaring
  std::size_t p = 1;
  while (p < n) {
    nil = mat_mul(nil, nil);
    p *= 2;
    if (mat_is_zero(nil)) return true;
  }
  return mat_is_zero(nil);
}

Element Endo::apply(const Element& a) const {
  if (a.algebra != alg_)
    throw ContextMismatch("apply: element of a different algebra");
  const QMatrix& m = matrix();
  Element out = alg_->zero();
  std::size_t n = alg_->dim();
  for (std::size_t j = 0; j < n; ++j) {
    if (a.coords[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!m[i][j].is_zero()) out.coords[i] += m[i][j] * a.coords[j];
  }
  return out;
}

Endo Endo::compose(const Endo& other) const {
  if (alg_ != other.alg_)
    throw ContextMismatch("compose: endomorphisms of different algebras");
  std::vector<Element> images;
  for (const auto& q : other.image_polys_)
    images.push_back(alg_->normal_form(q.substitute(image_polys_)));
  return Endo(*alg_, std::move(images));
}

std::vector<Endo> sign_diagonal_automorphisms(const WeilAlgebra& algebra) {
  uint32_t k = algebra.context()->num_vars();
  std::vector<Endo> out;
  for (uint32_t bits = 0; bits < (1u << k); ++bits) {
    std::vector<Element> images;
    for (uint32_t i = 0; i < k; ++i) {
      Element xi = algebra.variable_class(i);
      if (bits & (1u << i))
        for (auto& c : xi.coords) c = -c;
      images.push_back(std::move(xi));
    }
    Endo e(algebra, std::move(images));
    if (e.is_well_defined()) out.push_back(std::move(e));
  }
  return out;
}

Subspace fixed_subspace(const WeilAlgebra& algebra,
                        const std::vector<Endo>& endos) {
  std::size_t n = algebra.dim();
  std::vector<QVec> rows;
  for (const auto& e : endos) {
    if (!e.is_well_defined())
      throw UsageError("fixed_subspace: endomorphism is not well defined");
    QMatrix m = mat_sub(e.matrix(), mat_identity(n));
    for (auto& row : m) {
      bool nonzero = false;
      for (const auto& x : row) nonzero = nonzero || !x.is_zero();
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return kernel(n, rows);
}

}  // namespace weilab
