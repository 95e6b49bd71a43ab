#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expansive/unipoly.hpp"

using namespace expansive;

TEST_CASE("arithmetic and division") {
  UniPoly a = UniPoly::from_ints({-1, 0, 1});  // x^2 - 1
  UniPoly b = UniPoly::from_ints({1, 1});      // x + 1
  CHECK(a + b == UniPoly::from_ints({0, 1, 1}));
  CHECK(a * b == UniPoly::from_ints({-1, -1, 1, 1}));
  auto [q, r] = UniPoly::divmod(a, b);
  CHECK(q == UniPoly::from_ints({-1, 1}));
  CHECK(r.is_zero());
  CHECK(a.divexact(b) == q);
  CHECK_THROWS_AS(b.divexact(a), error);
}

TEST_CASE("evaluation") {
  UniPoly p = UniPoly::from_ints({1, -2, 1});  // (x-1)^2
  CHECK(p(Rat(1)) == 0);
  CHECK(p(Rat(3)) == 4);
  CHECK(p.eval_double(3.0) == doctest::Approx(4.0));
}

TEST_CASE("gcd is monic and correct") {
  UniPoly a = UniPoly::from_ints({-1, 0, 1});  // (x-1)(x+1)
  UniPoly b = UniPoly::from_ints({1, -2, 1});  // (x-1)^2
  CHECK(poly_gcd(a, b) == UniPoly::from_ints({-1, 1}));
  CHECK(poly_gcd(a, UniPoly::from_ints({2})).degree() == 0);
}

TEST_CASE("remove_root strips full multiplicity") {
  UniPoly p = UniPoly::from_ints({1, -2, 1}) * UniPoly::from_ints({2, 1});
  int mult = p.remove_root(Rat(1));
  CHECK(mult == 2);
  CHECK(p.monic() == UniPoly::from_ints({2, 1}));
}

TEST_CASE("reciprocal and zero-root stripping") {
  UniPoly p = UniPoly::from_ints({2, 0, 3, 1});
  CHECK(p.reciprocal() == UniPoly::from_ints({1, 3, 0, 2}));
  UniPoly q = UniPoly::from_ints({0, 0, 5, 1});
  CHECK(q.strip_zero_roots() == 2);
  CHECK(q == UniPoly::from_ints({5, 1}));
}

TEST_CASE("primitive integer form") {
  UniPoly p({Rat(1, 3), Rat(1, 2)});
  CHECK(p.primitive_integer() == UniPoly::from_ints({2, 3}));
  CHECK(UniPoly::from_ints({4, 6}).primitive_integer() == UniPoly::from_ints({2, 3}));
}

TEST_CASE("sturm counts distinct roots in open intervals") {
  UniPoly p = UniPoly::from_ints({-2, 0, 1}) * UniPoly::from_ints({-3, 0, 1});
  CHECK(sturm_count(p, Rat(0), Rat(2)) == 2);  // sqrt2, sqrt3
  CHECK(sturm_count(p, Rat(-2), Rat(2)) == 4);  // all four roots are inside
  CHECK(sturm_count(p, Rat(-10), Rat(10)) == 4);

  UniPoly q = UniPoly::from_ints({0, -1, 0, 1});  // x(x-1)(x+1)
  CHECK(sturm_count(q, Rat(-1), Rat(1)) == 1);
}

TEST_CASE("sturm handles repeated roots") {
  UniPoly p = UniPoly::from_ints({1, -2, 1});  // (x-1)^2
  CHECK(sturm_count(p, Rat(0), Rat(2)) == 1);
}

TEST_CASE("root isolation and refinement") {
  UniPoly p = UniPoly::from_ints({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  auto roots = isolate_real_roots(p, Rat(0), Rat(4));
  REQUIRE(roots.size() == 3);
  for (int k = 0; k < 3; ++k) {
    auto [lo, hi] = refine_root(p, roots[k].first, roots[k].second, Rat(1, 1000));
    CHECK(hi - lo <= Rat(1, 1000));
    CHECK(to_double(lo) == doctest::Approx(k + 1).epsilon(1e-2));
  }
}

TEST_CASE("cauchy bound contains all real roots") {
  UniPoly p = UniPoly::from_ints({-4, 0, 1});
  CHECK(p.cauchy_bound() > 2);
}

TEST_CASE("squarefree part") {
  UniPoly p = UniPoly::from_ints({1, -2, 1});
  CHECK(p.squarefree_part().monic() == UniPoly::from_ints({-1, 1}));
}

TEST_CASE("dyadic and continued-fraction conversions") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(-0.375) == Rat(-3, 8));
  CHECK(rat_from_double(3.0) == Rat(3));
  CHECK(rational_approx(1.0 / 3.0, 100) == Rat(1, 3));
  CHECK(rational_approx(0.6666666666666666, 10) == Rat(2, 3));
  CHECK(rational_approx(0.25, 8) == Rat(1, 4));
}
