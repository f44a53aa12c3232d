#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace weilab {

// Exponent tuple of a monomial in k variables.
struct Monomial {
  std::vector<uint32_t> exponents;

  uint32_t degree() const {
    uint32_t d = 0;
    for (uint32_t e : exponents) d += e;
    return d;
  }
  bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

// Graded lexicographic order: lower total degree first; within a degree,
// larger power of the earlier variable first (x^2 before x*y before y^2).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents > b.exponents;
  }
};

// All monomials in k variables of total degree exactly deg, in grlex order.
std::vector<Monomial> monomials_of_degree(uint32_t k, uint32_t deg);

// The ambient truncated ring: k variables, truncation order r, and the fixed
// grlex enumeration of the binomial(k+r, k) monomials of degree <= r.
class RingContext {
 public:
  RingContext(uint32_t k, uint32_t r, std::vector<std::string> var_names);

  uint32_t num_vars() const { return k_; }
  uint32_t order() const { return r_; }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t num_monomials() const { return monomials_.size(); }

  std::size_t index_of(const Monomial& m) const;
  const Monomial& monomial_at(std::size_t i) const { return monomials_[i]; }

  bool operator==(const RingContext& o) const {
    return k_ == o.k_ && r_ == o.r_ && names_ == o.names_;
  }

 private:
  uint32_t k_;
  uint32_t r_;
  std::vector<std::string> names_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexLess> index_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

template <class C>
bool coeff_is_zero(const C& c) {
  return c.is_zero();
}
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }

// A polynomial truncated at total degree r, with coefficients in C. C is
// Rational almost everywhere; the constraint generator instantiates it with
// polynomials in unknown scalars.
template <class C>
class TPoly {
 public:
  using TermMap = std::map<Monomial, C, GrlexLess>;

  TPoly() = default;
  explicit TPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static TPoly constant(ContextPtr ctx, C c) {
    TPoly p(std::move(ctx));
    Monomial one{std::vector<uint32_t>(p.ctx_->num_vars(), 0)};
    p.set(one, std::move(c));
    return p;
  }
  static TPoly variable(ContextPtr ctx, uint32_t i, C c) {
    TPoly p(std::move(ctx));
    Monomial m{std::vector<uint32_t>(p.ctx_->num_vars(), 0)};
    m.exponents[i] = 1;
    p.set(m, std::move(c));
    return p;
  }
  static TPoly monomial(ContextPtr ctx, Monomial m, C c) {
    TPoly p(std::move(ctx));
    p.set(std::move(m), std::move(c));
    return p;
  }

  void set(Monomial m, C c) {
    if (m.degree() > ctx_->order())
      throw UsageError("monomial degree exceeds truncation order");
    if (coeff_is_zero(c))
      terms_.erase(m);
    else
      terms_[std::move(m)] = std::move(c);
  }

  void add_term(const Monomial& m, const C& c) {
    if (m.degree() > ctx_->order()) return;  // truncated away
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!coeff_is_zero(c)) terms_.emplace(m, c);
    } else {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  TPoly operator+(const TPoly& o) const {
    check_same_context(o);
    TPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
  }

  TPoly operator-() const {
    TPoly out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  TPoly operator-(const TPoly& o) const { return *this + (-o); }

  // Convolution product with all terms of degree > r discarded.
  TPoly mul_trunc(const TPoly& o) const {
    check_same_context(o);
    TPoly out(ctx_);
    uint32_t r = ctx_->order();
    for (const auto& [ma, ca] : terms_) {
      uint32_t da = ma.degree();
      for (const auto& [mb, cb] : o.terms_) {
        if (da + mb.degree() > r) continue;
        Monomial m{ma.exponents};
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
          m.exponents[i] += mb.exponents[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }

  TPoly scaled(const C& s) const {
    TPoly out(ctx_);
    if (coeff_is_zero(s)) return out;
    for (const auto& [m, c] : terms_) {
      C v = c * s;
      if (!coeff_is_zero(v)) out.terms_.emplace(m, std::move(v));
    }
    return out;
  }

  TPoly pow(uint32_t n) const {
    TPoly out = constant(ctx_, C(1));
    for (uint32_t i = 0; i < n; ++i) out = out.mul_trunc(*this);
    return out;
  }

  // p(images[0], ..., images[k-1]) in the truncated ring.
  TPoly substitute(const std::vector<TPoly>& images) const {
    if (images.size() != ctx_->num_vars())
      throw UsageError("substitute: expected " +
                       std::to_string(ctx_->num_vars()) + " images, got " +
                       std::to_string(images.size()));
    for (const auto& im : images) check_same_context(im);
    TPoly out(ctx_);
    for (const auto& [m, c] : terms_) {
      TPoly prod = constant(ctx_, C(1));
      for (std::size_t i = 0; i < m.exponents.size(); ++i)
        if (m.exponents[i] > 0)
          prod = prod.mul_trunc(images[i].pow(m.exponents[i]));
      out = out + prod.scaled(c);
    }
    return out;
  }

  // Formal partial derivative with respect to variable i (0-based).
  TPoly partial_derivative(uint32_t i) const {
    if (i >= ctx_->num_vars())
      throw UsageError("partial_derivative: variable index out of range");
    TPoly out(ctx_);
    for (const auto& [m, c] : terms_) {
      if (m.exponents[i] == 0) continue;
      Monomial d{m.exponents};
      --d.exponents[i];
      out.add_term(d, c * C(m.exponents[i]));
    }
    return out;
  }

  // Dense coordinates over the context's monomial enumeration.
  std::vector<C> to_vector() const {
    std::vector<C> v(ctx_->num_monomials(), C(0));
    for (const auto& [m, c] : terms_) v[ctx_->index_of(m)] = c;
    return v;
  }

  static TPoly from_vector(ContextPtr ctx, const std::vector<C>& v) {
    TPoly p(ctx);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!coeff_is_zero(v[i])) p.terms_.emplace(ctx->monomial_at(i), v[i]);
    return p;
  }

  bool operator==(const TPoly& o) const { return terms_ == o.terms_; }

 private:
  void check_same_context(const TPoly& o) const {
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
      throw ContextMismatch("polynomial operands have different contexts");
  }

  ContextPtr ctx_;
  TermMap terms_;
};

using TruncPoly = TPoly<Rational>;

// Parses the polynomial grammar:
//   poly := ['-'] term (('+'|'-') term)*
//   term := [coeff '*'] factor ('*' factor)* | coeff
//   factor := var ['^' nat] ; coeff := int | int '/' nat
// Terms of degree > r are rejected, not truncated.
TruncPoly parse_poly(const std::string& text, ContextPtr ctx);

// Renders a monomial ("1" for the empty one) in the input grammar.
std::string render_monomial(const RingContext& ctx, const Monomial& m);

// Renders a polynomial in the input grammar, terms in grlex order.
std::string render_poly(const TruncPoly& p);

}  // namespace weilab
