#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace weilab {

// Names for the unknown scalars appearing in constraint systems.
class SymbolTable {
 public:
  uint32_t add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<uint32_t>(names_.size() - 1);
  }
  const std::string& name(uint32_t id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

// A power product of unknown symbols, sorted by symbol id.
using SymMonomial = std::vector<std::pair<uint32_t, uint32_t>>;

// A polynomial with exact rational coefficients in unknown scalars, kept in
// canonical expanded form.
class UnknownPoly {
 public:
  UnknownPoly() = default;
  explicit UnknownPoly(int c) {
    if (c != 0) terms_[{}] = Rational(c);
  }
  explicit UnknownPoly(Rational c) {
    if (!c.is_zero()) terms_[{}] = std::move(c);
  }
  static UnknownPoly symbol(uint32_t id) {
    UnknownPoly p;
    p.terms_[{{id, 1}}] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<SymMonomial, Rational>& terms() const { return terms_; }

  UnknownPoly& operator+=(const UnknownPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  UnknownPoly operator+(const UnknownPoly& o) const {
    UnknownPoly out = *this;
    out += o;
    return out;
  }
  UnknownPoly operator-() const {
    UnknownPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  UnknownPoly operator-(const UnknownPoly& o) const { return *this + (-o); }

  UnknownPoly operator*(const UnknownPoly& o) const {
    UnknownPoly out;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_)
        out.add_term(mul_monomials(ma, mb), ca * cb);
    return out;
  }

  bool operator==(const UnknownPoly& o) const { return terms_ == o.terms_; }

  // Substitutes numeric values (indexed by symbol id).
  Rational evaluate(const std::vector<Rational>& assignment) const;

  // Degree-1 part as a dense coefficient vector plus the constant term;
  // used when equations are linear in a chosen symbol block.
  bool is_linear() const;

  std::string render(const SymbolTable& symbols) const;

 private:
  static SymMonomial mul_monomials(const SymMonomial& a, const SymMonomial& b);
  void add_term(const SymMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<SymMonomial, Rational> terms_;
};

}  // namespace weilab
