#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "autos.hpp"
#include "render.hpp"
#include "test_util.hpp"

using namespace weilab;
using wtest::make_algebra;

namespace {

WeilAlgebra example1() {
  return make_algebra(2, 4, {"x^2*y + y^4", "x^3 + x*y^2"}, "example1");
}

WeilAlgebra example2() {
  return make_algebra(
      3, 4, {"x^2 + y^3 + z^3", "x^3 + y^3 + z^4", "x*y*z"}, "example2");
}

Subspace monomial_span(const WeilAlgebra& a,
                       const std::vector<std::string>& monos) {
  std::vector<QVec> rows;
  for (const auto& t : monos)
    rows.push_back(a.normal_form(parse_poly(t, a.context())).coords);
  return rref(a.dim(), std::move(rows));
}

}  // namespace

TEST_CASE("well-definedness against the defining relations") {
  WeilAlgebra a = example1();
  CHECK(parse_endo_map(a, "x -> -x; y -> y").is_well_defined());
  CHECK(parse_endo_map(a, "x -> -x; y -> y").is_automorphism());
  // scaling x by 2 sends g1 to 4*x^2*y + y^4 = 3*x^2*y mod I, nonzero
  CHECK(!parse_endo_map(a, "x -> 2*x; y -> y").is_well_defined());
  CHECK(!parse_endo_map(a, "x -> 2*x; y -> y").is_automorphism());
  // flipping y alone breaks g1 the same way
  CHECK(!parse_endo_map(a, "x -> x; y -> -y").is_well_defined());
  // non-nilpotent image is rejected outright
  CHECK(!parse_endo_map(a, "x -> 1 + x; y -> y").is_well_defined());
  // well defined but not invertible on n/n^2
  Endo crush = parse_endo_map(a, "x -> 0; y -> 0");
  CHECK(crush.is_well_defined());
  CHECK(!crush.is_automorphism());
  CHECK_THROWS_AS(crush.is_orientation_preserving(), UsageError);
  CHECK_THROWS_AS(crush.is_unipotent(), UsageError);
}

TEST_CASE("linear part and orientation") {
  WeilAlgebra a = example1();
  Endo sigma = parse_endo_map(a, "x -> -x; y -> y");
  QMatrix lp = sigma.linear_part();
  REQUIRE(lp.size() == 2);
  CHECK(lp[0][0] == Rational(-1));
  CHECK(lp[0][1] == Rational(0));
  CHECK(lp[1][0] == Rational(0));
  CHECK(lp[1][1] == Rational(1));
  CHECK(!sigma.is_orientation_preserving());
  CHECK(Endo::identity(a).is_orientation_preserving());
  // higher-order perturbation leaves the linear part untouched
  Endo tau = parse_endo_map(a, "x -> x + x^3; y -> y");
  CHECK(tau.is_automorphism());
  CHECK(tau.linear_part() == mat_identity(2));
  CHECK(tau.is_unipotent());
  CHECK(tau.is_orientation_preserving());
  CHECK(!sigma.is_unipotent());
}

TEST_CASE("sign diagonals of the reference algebras") {
  WeilAlgebra a = example1();
  auto diag = sign_diagonal_automorphisms(a);
  // only eps = (1,1) and (-1,1): flipping y moves y^4 off x^2*y + y^4
  REQUIRE(diag.size() == 2);
  for (const auto& e : diag) {
    CHECK(e.is_automorphism());
    CHECK(e.images()[1] == a.variable_class(1));  // y is never flipped
  }
  CHECK(diag[0].images()[0] != diag[1].images()[0]);

  WeilAlgebra b = example2();
  auto diag2 = sign_diagonal_automorphisms(b);
  REQUIRE(diag2.size() == 1);  // identity only
  CHECK(diag2[0].matrix() == mat_identity(b.dim()));

  // full truncated algebras admit every sign pattern
  WeilAlgebra full = make_algebra(2, 3, {});
  CHECK(sign_diagonal_automorphisms(full).size() == 4);
}

TEST_CASE("fixed subspace of the x-flip on example 1") {
  WeilAlgebra a = example1();
  Endo sigma = parse_endo_map(a, "x -> -x; y -> y");
  Subspace fix = fixed_subspace(a, {sigma});
  CHECK(fix.dim() == 6);
  CHECK(fix == monomial_span(a, {"1", "y", "y^2", "y^3", "x^2", "x^2*y"}));
  // every fixed vector really is fixed
  for (const auto& v : fix.basis) {
    Element e = a.from_coords(v);
    CHECK(sigma.apply(e) == e);
  }
  // the empty family fixes everything
  CHECK(fixed_subspace(a, {}).dim() == a.dim());
  // identity fixes everything too
  CHECK(fixed_subspace(a, {Endo::identity(a)}).dim() == a.dim());
  CHECK_THROWS_AS(
      fixed_subspace(a, {parse_endo_map(a, "x -> 2*x; y -> y")}), UsageError);
}

TEST_CASE("apply is an algebra homomorphism (seeded)") {
  std::mt19937_64 rng(2718);
  WeilAlgebra a = example1();
  std::vector<Endo> maps;
  maps.push_back(parse_endo_map(a, "x -> -x; y -> y"));
  maps.push_back(parse_endo_map(a, "x -> x + x^3; y -> y"));
  maps.push_back(parse_endo_map(a, "x -> -x + 1/2*x^3; y -> y + x^2*y"));
  for (const auto& e : maps) {
    REQUIRE(e.is_well_defined());
    CHECK(e.apply(a.one()) == a.one());
    for (int iter = 0; iter < 40; ++iter) {
      Element p = a.from_coords(wtest::random_vector(rng, a.dim()));
      Element q = a.from_coords(wtest::random_vector(rng, a.dim()));
      Element sum = a.from_coords(wtest::random_vector(rng, a.dim()));
      for (std::size_t i = 0; i < a.dim(); ++i)
        sum.coords[i] = p.coords[i] + q.coords[i];
      CHECK(e.apply(a.multiply(p, q)) == a.multiply(e.apply(p), e.apply(q)));
      Element lhs = e.apply(sum), rhs = e.apply(p);
      for (std::size_t i = 0; i < a.dim(); ++i)
        rhs.coords[i] += e.apply(q).coords[i];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("composition and matrices are compatible") {
  WeilAlgebra a = example1();
  Endo sigma = parse_endo_map(a, "x -> -x; y -> y");
  Endo tau = parse_endo_map(a, "x -> x + x^3; y -> y");
  Endo st = sigma.compose(tau);
  CHECK(st.matrix() == mat_mul(sigma.matrix(), tau.matrix()));
  CHECK(sigma.compose(sigma).matrix() == mat_identity(a.dim()));
  Endo id = Endo::identity(a);
  CHECK(id.compose(sigma).matrix() == sigma.matrix());
  CHECK(sigma.compose(id).matrix() == sigma.matrix());
  // determinant of the induced matrix of an automorphism is nonzero
  CHECK(!mat_det(st.matrix()).is_zero());
  // image count validation and cross-algebra rejection
  CHECK_THROWS_AS(Endo(a, {a.variable_class(0)}), UsageError);
  WeilAlgebra b = example1();
  CHECK_THROWS_AS(Endo(a, {b.variable_class(0), b.variable_class(1)}),
                  ContextMismatch);
  CHECK_THROWS_AS(sigma.apply(b.one()), ContextMismatch);
}

TEST_CASE("parse_endo_map grammar") {
  WeilAlgebra a = example1();
  Endo e = parse_endo_map(a, "  x ->  y^2 ; y -> x*y ");
  CHECK(a.render(e.images()[0]) == "y^2");
  CHECK(a.render(e.images()[1]) == "x*y");
  // structural problems are usage errors; bad expressions are parse errors
  CHECK_THROWS_AS(parse_endo_map(a, "x -> y^2"), UsageError);  // y missing
  CHECK_THROWS_AS(parse_endo_map(a, "x -> 1; x -> 2; y -> y"), UsageError);
  CHECK_THROWS_AS(parse_endo_map(a, "z -> x; y -> y"), UsageError);
  CHECK_THROWS_AS(parse_endo_map(a, "x + y"), UsageError);
  CHECK_THROWS_AS(parse_endo_map(a, "x -> q; y -> y"), ParseError);
  CHECK_THROWS_AS(parse_endo_map(a, "x -> x +; y -> y"), ParseError);
}

TEST_CASE("unipotent automorphisms have determinant one") {
  WeilAlgebra a = example1();
  for (const char* text : {"x -> x + x^3; y -> y",
                           "x -> x; y -> y + x^2*y",
                           "x -> x + 1/3*x^2*y; y -> y - 2*x^3"}) {
    Endo e = parse_endo_map(a, text);
    REQUIRE(e.is_automorphism());
    CHECK(e.is_unipotent());
    CHECK(mat_det(e.matrix()) == Rational(1));
  }
}
