#include "poly.hpp"

#include <algorithm>
#include <cctype>

namespace weilab {

static void emit_monomials(uint32_t k, uint32_t deg, std::vector<uint32_t>& cur,
                           std::size_t pos, std::vector<Monomial>& out) {
  if (pos + 1 == k) {
    cur[pos] = deg;
    out.push_back(Monomial{cur});
    return;
  }
  // grlex within a degree wants the larger leading exponent first
  for (int32_t e = static_cast<int32_t>(deg); e >= 0; --e) {
    cur[pos] = static_cast<uint32_t>(e);
    emit_monomials(k, deg - static_cast<uint32_t>(e), cur, pos + 1, out);
  }
}

std::vector<Monomial> monomials_of_degree(uint32_t k, uint32_t deg) {
  std::vector<Monomial> out;
  std::vector<uint32_t> cur(k, 0);
  emit_monomials(k, deg, cur, 0, out);
  return out;
}

RingContext::RingContext(uint32_t k, uint32_t r,
                         std::vector<std::string> var_names)
    : k_(k), r_(r), names_(std::move(var_names)) {
  if (k < 1 || r < 1) throw UsageError("RingContext requires k >= 1 and r >= 1");
  if (names_.size() != k)
    throw UsageError("RingContext: expected " + std::to_string(k) +
                     " variable names");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw UsageError("RingContext: duplicate variable name '" + names_[i] +
                         "'");
  for (uint32_t d = 0; d <= r; ++d) {
    auto md = monomials_of_degree(k, d);
    monomials_.insert(monomials_.end(), md.begin(), md.end());
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i], i);
}

std::size_t RingContext::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw UsageError("monomial outside the truncated index set");
  return it->second;
}

namespace {

struct PolyParser {
  const std::string& text;
  const RingContext& ctx;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, 1, pos + 1);
  }

  bool at_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  bool at_ident() {
    skip_ws();
    return pos < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_');
  }

  BigInt parse_nat() {
    skip_ws();
    if (!at_digit()) fail("expected a number");
    std::string digits;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    return BigInt(digits);
  }

  Rational parse_coeff(bool negative) {
    BigInt num = parse_nat();
    BigInt den = 1;
    if (accept('/')) {
      den = parse_nat();
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    return negative ? -q : q;
  }

  std::string parse_ident() {
    skip_ws();
    std::string id;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      id += text[pos++];
    return id;
  }

  // var ['^' nat]; accumulates into the exponent tuple
  void parse_factor(std::vector<uint32_t>& exps) {
    std::string id = parse_ident();
    auto it = std::find(ctx.var_names().begin(), ctx.var_names().end(), id);
    if (it == ctx.var_names().end()) fail("unknown variable '" + id + "'");
    std::size_t vi = static_cast<std::size_t>(it - ctx.var_names().begin());
    uint32_t e = 1;
    if (accept('^')) {
      BigInt n = parse_nat();
      if (n > 1000000) fail("exponent too large");
      e = static_cast<uint32_t>(n);
    }
    exps[vi] += e;
  }

  void parse_term(TruncPoly& acc, bool negative) {
    Rational coeff = 1;
    bool have_coeff = false;
    if (at_digit()) {
      coeff = parse_coeff(false);
      have_coeff = true;
    }
    std::vector<uint32_t> exps(ctx.num_vars(), 0);
    bool have_factor = false;
    if (!have_coeff || accept('*')) {
      if (!at_ident() && have_coeff)
        fail("expected a variable after '*'");
      if (at_ident()) {
        parse_factor(exps);
        have_factor = true;
        while (accept('*')) parse_factor(exps);
      }
    }
    if (!have_coeff && !have_factor) fail("expected a term");
    if (negative) coeff = -coeff;
    Monomial m{exps};
    if (m.degree() > ctx.order())
      fail("term degree " + std::to_string(m.degree()) +
           " exceeds truncation order " + std::to_string(ctx.order()));
    acc.add_term(m, coeff);
  }

  TruncPoly parse(ContextPtr cp) {
    TruncPoly acc(cp);
    bool neg = accept('-');
    parse_term(acc, neg);
    for (;;) {
      if (accept('+'))
        parse_term(acc, false);
      else if (accept('-'))
        parse_term(acc, true);
      else
        break;
    }
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return acc;
  }
};

}  // namespace

TruncPoly parse_poly(const std::string& text, ContextPtr ctx) {
  PolyParser p{text, *ctx};
  return p.parse(ctx);
}

std::string render_monomial(const RingContext& ctx, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.var_names()[i];
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_poly(const TruncPoly& p) {
  if (p.is_zero()) return "0";
  const RingContext& ctx = *p.context();
  std::string out;
  for (const auto& [m, c] : p.terms()) {
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
    std::string mono = render_monomial(ctx, m);
    if (mono == "1")
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace weilab
