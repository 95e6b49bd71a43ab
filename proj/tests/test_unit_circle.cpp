#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expansive/unit_circle.hpp"

using namespace expansive;

namespace {
const UniPoly kLehmer =
    UniPoly::from_ints({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
}

TEST_CASE("counts on simple polynomials") {
  CHECK(unit_circle_root_count(UniPoly::from_ints({-1, 1})).count == 1);   // x - 1
  CHECK(unit_circle_root_count(UniPoly::from_ints({-2, 1})).count == 0);   // x - 2
  CHECK(unit_circle_root_count(UniPoly::from_ints({1, 0, 1})).count == 2);  // x^2 + 1
  CHECK(unit_circle_root_count(UniPoly::from_ints({-1, -1, 1})).count == 0);  // golden
  CHECK(unit_circle_root_count(cyclotomic_polynomial(5)).count == 4);
  CHECK(unit_circle_root_count(cyclotomic_polynomial(12)).count == 4);
}

TEST_CASE("monomial factors and multiplicities do not disturb the count") {
  UniPoly p = UniPoly::monomial(3) * UniPoly::from_ints({-1, 1}) * UniPoly::from_ints({-1, 1});
  CHECK(unit_circle_root_count(p).count == 1);
  CHECK_THROWS_AS(unit_circle_root_count(UniPoly()), error);
  CHECK(unit_circle_root_count(UniPoly::constant(Rat(7))).count == 0);
}

TEST_CASE("lehmer polynomial has a salem pair on the circle") {
  auto cc = unit_circle_root_count(kLehmer);
  CHECK(cc.count == 8);
  CHECK(cc.transcript.total == cc.count);
  CHECK(cc.count == 2 * cc.transcript.interior_count + cc.transcript.roots_at_one +
                        cc.transcript.roots_at_minus_one);
}

TEST_CASE("mixed products") {
  UniPoly p = UniPoly::from_ints({1, 0, 1}) * UniPoly::from_ints({-1, -1, 1});
  CHECK(unit_circle_root_count(p).count == 2);
}

TEST_CASE("extraction prefers exact forms") {
  auto one = extract_unimodular_root(UniPoly::from_ints({-1, 1}));
  REQUIRE(one.has_value());
  CHECK(std::get<CycValue>(*one).is_one());

  auto minus = extract_unimodular_root(UniPoly::from_ints({1, 1}));
  REQUIRE(minus.has_value());
  CHECK(std::get<CycValue>(*minus).as_rational() == Rat(-1));

  auto i4 = extract_unimodular_root(UniPoly::from_ints({1, 0, 1}));
  REQUIRE(i4.has_value());
  CHECK(std::get<CycValue>(*i4).order() == 4);

  CHECK(!extract_unimodular_root(UniPoly::from_ints({-2, 1})).has_value());
}

TEST_CASE("extraction falls back to an isolated algebraic point") {
  auto root = extract_unimodular_root(kLehmer);
  REQUIRE(root.has_value());
  const auto* pt = std::get_if<AlgebraicPoint>(&*root);
  REQUIRE(pt != nullptr);
  CHECK(pt->w_lo >= -2);  // the isolating interval is open at its left end
  CHECK(pt->w_hi <= 2);
  // the isolating interval brackets a sign change of the real transform
  CHECK(pt->real_poly(pt->w_lo) * pt->real_poly(pt->w_hi) <= 0);
  double turn = pt->turn();
  CHECK(turn > 0.0);
  CHECK(turn < 1.0);
  // check |z| = 1 numerically through the angle: trivially true by form; check
  // the minimal polynomial nearly vanishes at the reconstructed point
  double w = 2 * std::cos(2 * M_PI * turn);
  CHECK(pt->real_poly.eval_double(w) == doctest::Approx(0.0).epsilon(1e-6));
}
