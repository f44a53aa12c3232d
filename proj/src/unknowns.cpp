#include "unknowns.hpp"

#include "errors.hpp"

namespace weilab {

SymMonomial UnknownPoly::mul_monomials(const SymMonomial& a,
                                       const SymMonomial& b) {
  SymMonomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

Rational UnknownPoly::evaluate(const std::vector<Rational>& assignment) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [id, exp] : m) {
      if (id >= assignment.size())
        throw UsageError("evaluate: missing value for unknown #" +
                         std::to_string(id));
      for (uint32_t e = 0; e < exp; ++e) v *= assignment[id];
    }
    total += v;
  }
  return total;
}

bool UnknownPoly::is_linear() const {
  for (const auto& [m, c] : terms_) {
    uint32_t deg = 0;
    for (const auto& [id, exp] : m) deg += exp;
    if (deg > 1) return false;
  }
  return true;
}

std::string UnknownPoly::render(const SymbolTable& symbols) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (const auto& [id, exp] : m) {
      if (!mono.empty()) mono += "*";
      mono += symbols.name(id);
      if (exp > 1) mono += "^" + std::to_string(exp);
    }
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace weilab
