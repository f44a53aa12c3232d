#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "classify.hpp"
#include "test_util.hpp"

using namespace weilab;
using wtest::make_algebra;

namespace {

// Independent oracle: an ideal is w-graded iff for every basis row and every
// weight value, the slice of the row at that weight is again in the ideal.
// Checked here by scaling: the diagonal map x_i -> t^{w_i} x_i must send the
// ideal into itself for several sample values of t.
bool graded_oracle(const WeilAlgebra& a, const std::vector<uint32_t>& w) {
  const auto& ctx = a.context();
  for (const Rational& t : {Rational(2), Rational(3), Rational(-1),
                            Rational(1, 2)}) {
    for (const auto& row : a.ideal().basis) {
      QVec scaled(row.size(), Rational(0));
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero()) continue;
        Rational factor(1);
        const Monomial& m = ctx->monomial_at(i);
        for (std::size_t v = 0; v < w.size(); ++v)
          for (uint32_t e = 0; e < m.exponents[v]; ++e)
            for (uint32_t rep = 0; rep < w[v]; ++rep) factor *= t;
        scaled[i] = factor * row[i];
      }
      if (!contains(a.ideal(), scaled)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("monomial ideals are recognized") {
  WeilAlgebra mono = make_algebra(2, 4, {"x^2", "y^3"});
  CHECK(is_monomial_ideal(mono));
  CHECK(is_homogeneous_ideal(mono));

  WeilAlgebra homog = make_algebra(2, 3, {"x^2 + y^2"});
  CHECK(!is_monomial_ideal(homog));
  CHECK(is_homogeneous_ideal(homog));

  WeilAlgebra ex1 = make_algebra(2, 4, {"x^2*y + y^4", "x^3 + x*y^2"});
  CHECK(!is_monomial_ideal(ex1));
  CHECK(!is_homogeneous_ideal(ex1));

  // full truncated algebra: the ideal is the span of the degree-(r+1) cut,
  // which our closure stores implicitly as empty at the quotient level
  WeilAlgebra full = make_algebra(2, 2, {});
  CHECK(is_monomial_ideal(full));
}

TEST_CASE("grading weights for a quasi-homogeneous ideal") {
  WeilAlgebra a = make_algebra(2, 4, {"x^2 + y^3"});
  auto w = find_grading_weights(a, 10);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<uint32_t>{3, 2});
  CHECK(graded_oracle(a, *w));

  // the search returns the lexicographically smallest admissible vector
  auto again = find_grading_weights(a, 10);
  CHECK(again == w);

  // too small a bound misses it
  CHECK(!find_grading_weights(a, 2).has_value());
  CHECK_THROWS_AS(find_grading_weights(a, 0), UsageError);
}

TEST_CASE("homogeneous ideals are graded by all-ones weights") {
  WeilAlgebra a = make_algebra(3, 3, {"x^2 + y*z", "y^2 - x*z"});
  CHECK(is_homogeneous_ideal(a));
  auto w = find_grading_weights(a, 5);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<uint32_t>{1, 1, 1});
  CHECK(graded_oracle(a, *w));
}

TEST_CASE("example 1 admits no grading weights") {
  WeilAlgebra a = make_algebra(2, 4, {"x^2*y + y^4", "x^3 + x*y^2"});
  // 2a = 3b (from g1) and a = b (from g2) have no common positive solution
  CHECK(!find_grading_weights(a, 20).has_value());
  CHECK(!dwindlable_certificate(a, 20).has_value());
}

TEST_CASE("the weight counterexample resists the search up to bound 100") {
  WeilAlgebra a = make_algebra(2, 4, {"x^2 + y^3", "x^3 + y^4"});
  CHECK(!find_grading_weights(a, 100).has_value());
  // sanity: each generator alone *is* quasi-homogeneous, the pair is not
  CHECK(find_grading_weights(make_algebra(2, 4, {"x^2 + y^3"}), 10)
            .has_value());
  CHECK(graded_oracle(a, {3, 2}) == false);
}

TEST_CASE("the non-dwindlable example resists the search up to bound 100") {
  WeilAlgebra a = make_algebra(2, 5, {"x*y^2 + x^5", "x^2*y + y^5"});
  CHECK(!dwindlable_certificate(a, 100).has_value());
}

TEST_CASE("dwindlable certificate carries the witness weights") {
  WeilAlgebra a = make_algebra(2, 4, {"x^2 + y^3"});
  auto cert = dwindlable_certificate(a, default_weight_bound(a));
  REQUIRE(cert.has_value());
  CHECK(cert->kind == CertificateKind::WeightGrading);
  CHECK(cert->weights == std::vector<uint32_t>{3, 2});
  CHECK(verify_certificate(a, *cert));
}

TEST_CASE("order/width pre-check thresholds") {
  auto granted = [](const WeilAlgebra& a) {
    auto c = order_theorem_precheck(a);
    if (c) {
      CHECK(c->kind == CertificateKind::OrderTheorem);
      CHECK(c->width == a.width());
      CHECK(c->order == a.order());
      CHECK(verify_certificate(a, *c));
    }
    return c.has_value();
  };
  CHECK(granted(make_algebra(1, 4, {})));             // width 1, order 4
  CHECK(granted(make_algebra(1, 6, {})));             // width 1, any order
  CHECK(granted(make_algebra(2, 3, {})));             // width 2, order 3
  CHECK(!granted(make_algebra(2, 4, {})));            // width 2, order 4
  CHECK(granted(make_algebra(3, 2, {})));             // width 3, order 2
  CHECK(!granted(make_algebra(3, 3, {})));            // width 3, order 3
  CHECK(!granted(make_algebra(2, 4, {"x^2*y + y^4", "x^3 + x*y^2"})));
}

TEST_CASE("default weight bound scales with the order") {
  CHECK(default_weight_bound(make_algebra(2, 4, {})) == 16);
  CHECK(default_weight_bound(make_algebra(3, 3, {})) == 12);
  CHECK(default_weight_bound(make_algebra(1, 1, {})) == 4);
}

TEST_CASE("verify_certificate rejects tampered witnesses") {
  WeilAlgebra a = make_algebra(2, 4, {"x^2 + y^3"});
  Certificate good;
  good.kind = CertificateKind::WeightGrading;
  good.weights = {3, 2};
  CHECK(verify_certificate(a, good));
  Certificate scaled = good;
  scaled.weights = {6, 4};  // same grading, still valid
  CHECK(verify_certificate(a, scaled));
  Certificate wrong = good;
  wrong.weights = {2, 3};
  CHECK(!verify_certificate(a, wrong));
  Certificate short_w = good;
  short_w.weights = {3};
  CHECK(!verify_certificate(a, short_w));
  Certificate zero_w = good;
  zero_w.weights = {0, 0};
  CHECK(!verify_certificate(a, zero_w));

  Certificate ot;
  ot.kind = CertificateKind::OrderTheorem;
  ot.width = a.width();
  ot.order = a.order();
  // width 1, order 4: granted by the theorem and consistent with the algebra
  WeilAlgebra thin = make_algebra(1, 4, {});
  Certificate ot_thin;
  ot_thin.kind = CertificateKind::OrderTheorem;
  ot_thin.width = 1;
  ot_thin.order = 4;
  CHECK(verify_certificate(thin, ot_thin));
  Certificate ot_bad = ot_thin;
  ot_bad.order = 3;  // does not match the algebra
  CHECK(!verify_certificate(thin, ot_bad));

  Certificate mono;
  mono.kind = CertificateKind::Monomial;
  CHECK(verify_certificate(make_algebra(2, 3, {"x^2", "x*y"}), mono));
  CHECK(!verify_certificate(make_algebra(2, 3, {"x^2 + y^2"}), mono));
}

TEST_CASE("triviality report composes the certificate chain") {
  WeilAlgebra ex1 = make_algebra(2, 4, {"x^2*y + y^4", "x^3 + x*y^2"});
  TrivialityReport rep = triviality_report(ex1);
  REQUIRE(rep.entries.size() == 5);
  CHECK(rep.entries[0].kind == CertificateKind::Monomial);
  CHECK(rep.entries[0].outcome == CertOutcome::Failed);
  CHECK(rep.entries[1].outcome == CertOutcome::Failed);       // homogeneous
  CHECK(rep.entries[2].outcome == CertOutcome::Failed);       // weights
  CHECK(rep.entries[3].outcome == CertOutcome::Failed);       // order theorem
  CHECK(rep.entries[4].outcome == CertOutcome::NotApplicable);
  CHECK(!rep.trivial_certified);

  // supplying the derivation-kernel outcome flips the verdict
  TrivialityOptions opts;
  opts.derivation_kernel_trivial = true;
  TrivialityReport rep2 = triviality_report(ex1, opts);
  CHECK(rep2.entries[4].outcome == CertOutcome::Granted);
  CHECK(rep2.trivial_certified);
  opts.derivation_kernel_trivial = false;
  CHECK(!triviality_report(ex1, opts).trivial_certified);

  // a monomial ideal certifies immediately, whatever else fails
  TrivialityReport mono = triviality_report(make_algebra(2, 3, {"x^2", "x*y"}));
  CHECK(mono.entries[0].outcome == CertOutcome::Granted);
  CHECK(mono.trivial_certified);
  REQUIRE(mono.entries[0].certificate.has_value());
  CHECK(verify_certificate(make_algebra(2, 3, {"x^2", "x*y"}),
                           *mono.entries[0].certificate));

  // order-theorem route can be switched off
  TrivialityOptions no_ot;
  no_ot.use_order_theorem = false;
  TrivialityReport rep3 = triviality_report(make_algebra(1, 4, {}), no_ot);
  CHECK(rep3.entries[3].outcome == CertOutcome::NotApplicable);

  // custom weight bound is honored
  TrivialityOptions tight;
  tight.weight_bound = 2;
  WeilAlgebra qh = make_algebra(2, 4, {"x^2 + y^3"});
  CHECK(!triviality_report(qh, tight).trivial_certified);
  CHECK(triviality_report(qh).trivial_certified);  // default bound 16 finds it
}

TEST_CASE("certificate kind names are stable") {
  CHECK(certificate_kind_name(CertificateKind::Monomial) == "monomial");
  CHECK(certificate_kind_name(CertificateKind::Homogeneous) == "homogeneous");
  CHECK(certificate_kind_name(CertificateKind::WeightGrading) ==
        "weight-grading");
  CHECK(certificate_kind_name(CertificateKind::OrderTheorem) ==
        "order-theorem");
  CHECK(certificate_kind_name(CertificateKind::DerivationKernelTrivial) ==
        "derivation-kernel-trivial");
}

TEST_CASE("seeded monomial and homogeneous ideals always certify") {
  std::mt19937_64 rng(1717);
  int done = 0;
  while (done < 40) {
    uint32_t k = 1 + rng() % 3, r = 2 + rng() % 3;
    auto ctx = wtest::make_ctx(k, r);
    AlgebraSpec spec;
    spec.name = "rand";
    spec.ctx = ctx;
    bool monomial_only = rng() % 2 == 0;
    uint32_t gens = 1 + rng() % 2;
    for (uint32_t g = 0; g < gens; ++g) {
      uint32_t deg = 2 + rng() % (r - 1 + 1);
      if (deg > r) deg = r;
      auto slice = monomials_of_degree(k, deg);
      TruncPoly p(ctx);
      p.add_term(slice[rng() % slice.size()], Rational(1));
      if (!monomial_only)  // add a second term of the same degree
        p.add_term(slice[rng() % slice.size()], wtest::random_coeff(rng));
      if (p.is_zero()) continue;
      spec.generators.push_back(std::move(p));
    }
    if (spec.generators.empty()) continue;
    WeilAlgebra a = WeilAlgebra::build(std::move(spec));
    ++done;
    TrivialityReport rep = triviality_report(a);
    CHECK(rep.trivial_certified);
    if (monomial_only) CHECK(is_monomial_ideal(a));
    CHECK(is_homogeneous_ideal(a));
  }
}
