#include "weil.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace weilab {

AlgebraSpec parse_algebra_spec(const std::string& text,
                               const std::string& name) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> vars;
  std::optional<uint32_t> order;
  std::vector<std::string> gen_texts;
  std::vector<std::size_t> gen_lines;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", lineno, 1);
    std::string key = line.substr(a, colon - a);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.pop_back();
    std::string value = line.substr(colon + 1);
    if (key == "vars") {
      std::istringstream vs(value);
      std::string v;
      while (vs >> v) vars.push_back(v);
      if (vars.empty()) throw ParseError("no variables declared", lineno, 1);
    } else if (key == "order") {
      int r = 0;
      std::istringstream os(value);
      if (!(os >> r) || r < 1)
        throw ParseError("order must be a positive integer", lineno, 1);
      order = static_cast<uint32_t>(r);
    } else if (key == "gen") {
      gen_texts.push_back(value);
      gen_lines.push_back(lineno);
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, 1);
    }
  }
  if (vars.empty()) throw ParseError("missing 'vars:' line", lineno, 1);
  if (!order) throw ParseError("missing 'order:' line", lineno, 1);

  AlgebraSpec spec;
  spec.name = name;
  spec.ctx = std::make_shared<RingContext>(
      static_cast<uint32_t>(vars.size()), *order, vars);
  for (std::size_t i = 0; i < gen_texts.size(); ++i) {
    TruncPoly p;
    try {
      p = parse_poly(gen_texts[i], spec.ctx);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), gen_lines[i], e.column);
    }
    if (p.is_zero())
      throw ParseError("generator is zero", gen_lines[i], 1);
    spec.generators.push_back(std::move(p));
  }
  return spec;
}

AlgebraSpec load_algebra_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  auto slash = name.find_last_of("/\\");
  if (slash != std::string::npos) name = name.substr(slash + 1);
  auto dot = name.rfind('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_algebra_spec(buf.str(), name);
}

// Pivot preference for the ideal RREF: eliminate higher-degree monomials
// first; within a degree, break ties lexicographically with the second
// declared variable most significant. This particular tie-break is the one
// that makes the standard-monomial complement coincide with the quotient
// bases the reference computations use (any tie-break is mathematically
// valid; this one is kept fixed for reproducibility).
static std::vector<std::size_t> ideal_pivot_priority(const RingContext& ctx) {
  const std::size_t n = ctx.num_monomials();
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  auto key = [&](std::size_t col) {
    const auto& e = ctx.monomial_at(col).exponents;
    std::vector<uint32_t> k;
    k.reserve(e.size() + 1);
    k.push_back(ctx.monomial_at(col).degree());
    if (e.size() >= 2) {
      k.push_back(e[1]);
      k.push_back(e[0]);
      k.insert(k.end(), e.begin() + 2, e.end());
    } else {
      k.insert(k.end(), e.begin(), e.end());
    }
    return k;
  };
  std::sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
    return key(a) > key(b);
  });
  return cols;
}

Subspace ideal_closure(const AlgebraSpec& spec) {
  const RingContext& ctx = *spec.ctx;
  std::vector<QVec> rows;
  for (const auto& gen : spec.generators) {
    for (const auto& m : ctx.monomials()) {
      TruncPoly mp = TruncPoly::monomial(spec.ctx, m, Rational(1));
      TruncPoly prod = mp.mul_trunc(gen);
      if (!prod.is_zero()) rows.push_back(prod.to_vector());
    }
  }
  return rref(ctx.num_monomials(), std::move(rows), ideal_pivot_priority(ctx));
}

std::size_t WeilAlgebra::default_dim_cap() {
  if (const char* env = std::getenv("WEILAB_DIM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 400;
}

WeilAlgebra WeilAlgebra::build(AlgebraSpec spec, std::size_t dim_cap) {
  const RingContext& ctx = *spec.ctx;
  Monomial unit{std::vector<uint32_t>(ctx.num_vars(), 0)};
  for (const auto& gen : spec.generators) {
    auto it = gen.terms().find(unit);
    if (it != gen.terms().end())
      throw NonLocalError("generator '" + render_poly(gen) +
                          "' has a nonzero constant term");
  }

  WeilAlgebra A;
  A.spec_ = std::move(spec);
  A.ideal_ = ideal_closure(A.spec_);
  if (!A.ideal_.pivots.empty() && A.ideal_.pivots[0] == 0)
    throw NonLocalError("1 lies in the ideal closure");

  for (const auto& gen : A.spec_.generators)
    for (const auto& [m, c] : gen.terms())
      if (m.degree() < 2) A.ideal_in_m2_ = false;

  for (std::size_t col : non_pivot_columns(A.ideal_)) {
    A.basis_cols_.push_back(col);
    A.basis_.push_back(ctx.monomial_at(col));
  }
  if (A.basis_.size() > dim_cap)
    throw UsageError("algebra dimension " + std::to_string(A.basis_.size()) +
                     " exceeds cap " + std::to_string(dim_cap));

  // normal forms of every ambient monomial, once
  A.mono_nf_.resize(ctx.num_monomials());
  for (std::size_t i = 0; i < ctx.num_monomials(); ++i) {
    QVec v(ctx.num_monomials(), Rational(0));
    v[i] = 1;
    QVec red = reduce(A.ideal_, std::move(v));
    QVec coords(A.basis_.size(), Rational(0));
    for (std::size_t b = 0; b < A.basis_cols_.size(); ++b)
      coords[b] = red[A.basis_cols_[b]];
    A.mono_nf_[i] = std::move(coords);
  }
  return A;
}

Element WeilAlgebra::one() const {
  Element e = zero();
  e.coords[0] = 1;  // 1 is always the first standard monomial
  return e;
}

Element WeilAlgebra::variable_class(uint32_t i) const {
  Monomial m{std::vector<uint32_t>(context()->num_vars(), 0)};
  m.exponents[i] = 1;
  return Element{this, mono_nf_[context()->index_of(m)]};
}

Element WeilAlgebra::from_coords(QVec coords) const {
  if (coords.size() != dim())
    throw UsageError("element coordinate length mismatch");
  return Element{this, std::move(coords)};
}

Element WeilAlgebra::normal_form(const TruncPoly& p) const {
  if (!(*p.context() == *context()))
    throw ContextMismatch("normal_form: polynomial context mismatch");
  Element out = zero();
  for (const auto& [m, c] : p.terms()) {
    const QVec& nf = mono_nf_[context()->index_of(m)];
    for (std::size_t i = 0; i < out.coords.size(); ++i)
      out.coords[i] += c * nf[i];
  }
  return out;
}

Element WeilAlgebra::multiply(const Element& a, const Element& b) const {
  if (a.algebra != this || b.algebra != this)
    throw ContextMismatch("multiply: elements of a different algebra");
  const RingContext& ctx = *context();
  Element out = zero();
  uint32_t r = ctx.order();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.coords[i].is_zero()) continue;
    uint32_t di = basis_[i].degree();
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b.coords[j].is_zero()) continue;
      if (di + basis_[j].degree() > r) continue;
      Monomial m{basis_[i].exponents};
      for (std::size_t t = 0; t < m.exponents.size(); ++t)
        m.exponents[t] += basis_[j].exponents[t];
      const QVec& nf = mono_nf_[ctx.index_of(m)];
      Rational c = a.coords[i] * b.coords[j];
      for (std::size_t t = 0; t < dim(); ++t)
        if (!nf[t].is_zero()) out.coords[t] += c * nf[t];
    }
  }
  return out;
}

TruncPoly WeilAlgebra::representative(const Element& a) const {
  TruncPoly p(context());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a.coords[i].is_zero()) p.add_term(basis_[i], a.coords[i]);
  return p;
}

std::string WeilAlgebra::render(const Element& a) const {
  return render_poly(representative(a));
}

Subspace WeilAlgebra::nilradical_power(uint32_t n) const {
  if (n < 1) throw UsageError("nilradical_power requires n >= 1");
  // products of n nilradical classes span exactly the classes of monomials
  // of degree >= n
  std::vector<QVec> rows;
  const RingContext& ctx = *context();
  for (std::size_t i = 0; i < ctx.num_monomials(); ++i)
    if (ctx.monomial_at(i).degree() >= n) rows.push_back(mono_nf_[i]);
  return rref(dim(), std::move(rows));
}

uint32_t WeilAlgebra::order() const {
  for (uint32_t n = 1; n <= context()->order() + 1; ++n)
    if (nilradical_power(n).dim() == 0) return n - 1;
  return context()->order();
}

uint32_t WeilAlgebra::width() const {
  return static_cast<uint32_t>(nilradical_power(1).dim() -
                               nilradical_power(2).dim());
}

Subspace WeilAlgebra::socle() const {
  // joint kernel of multiplication by each variable class; the variable
  // classes generate the nilradical
  std::vector<QVec> rows;
  for (uint32_t v = 0; v < context()->num_vars(); ++v) {
    Element xv = variable_class(v);
    // rows of the multiplication-by-xv matrix, stacked for all v
    QMatrix cols(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Element bj = zero();
      bj.coords[j] = 1;
      cols[j] = multiply(xv, bj).coords;
    }
    for (std::size_t t = 0; t < dim(); ++t) {
      QVec row(dim(), Rational(0));
      bool nonzero = false;
      for (std::size_t j = 0; j < dim(); ++j) {
        row[j] = cols[j][t];
        nonzero = nonzero || !row[j].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return kernel(dim(), rows);
}

Subspace WeilAlgebra::unit_span() const {
  QVec e1(dim(), Rational(0));
  e1[0] = 1;
  return rref(dim(), {e1});
}

Subspace WeilAlgebra::ma_subalgebra() const {
  return sum(unit_span(), socle());
}

}  // namespace weilab
