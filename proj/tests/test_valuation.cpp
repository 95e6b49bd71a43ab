#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "expansive/problem.hpp"

using namespace expansive;

TEST_CASE("quartic discriminant values") {
  CHECK(quartic_discriminant(Int(2), Int(1)) == 0);
  CHECK(quartic_discriminant(Int(3), Int(1)) == 45);
  CHECK(quartic_discriminant(Int(1), Int(0)) == 0);
  CHECK(quartic_discriminant(Int(4), Int(1)) == 192);
  CHECK(quartic_discriminant(Int(5), Int(4)) == 0);
  CHECK_THROWS_AS(quartic_discriminant(Int(0), Int(1)), error);
}

TEST_CASE("the nonpositive locus is exactly the three families") {
  const long bound = 50;
  auto pairs = enumerate_nonexpansive_pairs(bound);
  std::set<std::pair<long, long>> got(pairs.begin(), pairs.end());

  std::set<std::pair<long, long>> families;
  for (long b = -bound; b <= bound; ++b)
    for (long a : {b + 1, -(b + 1), b - 1, -(b - 1), b, -b})
      if (a != 0 && std::abs(a) <= bound) families.insert({a, b});
  CHECK(got == families);

  CHECK(got.count({5, 4}) == 1);
  CHECK(got.count({4, 1}) == 0);
}

TEST_CASE("discriminant sign matches the half-trace criterion") {
  for (long a = -40; a <= 40; ++a)
    for (long b = -40; b <= 40; ++b) {
      if (a == 0 || b == 0) continue;
      Rat c = (Rat(1) - Rat(a * a) - Rat(b * b)) / (2 * Rat(a) * Rat(b));
      bool in_range = c >= -1 && c <= 1;
      bool nonpositive = quartic_discriminant(Int(a), Int(b)) <= 0;
      CHECK(in_range == nonpositive);
    }
}

TEST_CASE("linear units: full subgroup with 2t+1") {
  LinearUnitsSpec spec{{{Int(2), Int(1)}}, {{Int(2), Int(1)}}, true};
  auto d = decide_linear_units(spec);
  REQUIRE(d.verdict == Verdict::NonExpansive);
  const auto* w = std::get_if<LogMapPoint>(&*d.witness);
  REQUIRE(w != nullptr);
  CHECK(w->c == Rat(-1));
  CHECK(std::get<CycValue>(w->z).as_rational() == Rat(-1));  // z = -1
}

TEST_CASE("linear units: full subgroup with 3t+1 is expansive") {
  LinearUnitsSpec spec{{{Int(3), Int(1)}}, {{Int(3), Int(1)}}, true};
  CHECK(decide_linear_units(spec).verdict == Verdict::Expansive);
}

TEST_CASE("linear units: missing irreducible forces non-expansiveness") {
  LinearUnitsSpec spec{{{Int(1), Int(1)}, {Int(1), Int(2)}}, {{Int(1), Int(1)}}, true};
  auto d = decide_linear_units(spec);
  REQUIRE(d.verdict == Verdict::NonExpansive);
  const auto* w = std::get_if<IrreducibleLocalization>(&*d.witness);
  REQUIRE(w != nullptr);
  CHECK(w->a == 1);
  CHECK(w->b == 2);
}

TEST_CASE("linear units: two compatible constraints") {
  LinearUnitsSpec spec{{{Int(2), Int(1)}, {Int(3), Int(2)}},
                       {{Int(2), Int(1)}, {Int(3), Int(2)}},
                       true};
  auto d = decide_linear_units(spec);
  REQUIRE(d.verdict == Verdict::NonExpansive);
  CHECK(std::get<LogMapPoint>(*d.witness).c == Rat(-1));
}

TEST_CASE("linear units: incompatible constraints are expansive") {
  LinearUnitsSpec spec{{{Int(2), Int(1)}, {Int(3), Int(1)}},
                       {{Int(2), Int(1)}, {Int(3), Int(1)}},
                       true};
  CHECK(decide_linear_units(spec).verdict == Verdict::Expansive);
}

TEST_CASE("linear units: b = 0 requires |a| = 1") {
  LinearUnitsSpec spec{{{Int(2), Int(0)}}, {{Int(2), Int(0)}}, true};
  CHECK(decide_linear_units(spec).verdict == Verdict::Expansive);
}

TEST_CASE("linear units: input validation") {
  CHECK_THROWS_AS(decide_linear_units(LinearUnitsSpec{{{Int(1), Int(1)}}, {}, false}), error);
  CHECK_THROWS_AS(
      decide_linear_units(LinearUnitsSpec{{{Int(0), Int(5)}}, {{Int(0), Int(5)}}, true}), error);
  // G must be contained in H
  CHECK_THROWS_AS(
      decide_linear_units(LinearUnitsSpec{{{Int(1), Int(1)}}, {{Int(1), Int(2)}}, true}), error);
  // (a, b) and (-a, -b) are the same generator
  CHECK_THROWS_AS(decide_linear_units(LinearUnitsSpec{
                      {{Int(2), Int(1)}, {Int(-2), Int(-1)}}, {{Int(2), Int(1)}}, true}),
                  error);
}

TEST_CASE("non-expansive log-map points satisfy the exact identity") {
  for (long b = 1; b <= 10; ++b) {
    long a = b + 1;
    LinearUnitsSpec spec{{{Int(a), Int(b)}}, {{Int(a), Int(b)}}, true};
    auto d = decide_linear_units(spec);
    REQUIRE(d.verdict == Verdict::NonExpansive);
    Rat c = std::get<LogMapPoint>(*d.witness).c;
    CHECK(Rat(a * a) + Rat(b * b) + 2 * Rat(a * b) * c - 1 == 0);
    CHECK(c >= -1);
    CHECK(c <= 1);
  }
}

TEST_CASE("algebraic units") {
  auto golden = decide_algebraic_unit({UniPoly::from_ints({-1, -1, 1})});
  CHECK(golden.verdict == Verdict::Expansive);
  CHECK(golden.certificate.has_value());

  auto gauss = decide_algebraic_unit({UniPoly::from_ints({1, 0, 1})});
  REQUIRE(gauss.verdict == Verdict::NonExpansive);
  CHECK(std::holds_alternative<Embedding>(*gauss.witness));

  auto lehmer = decide_algebraic_unit({UniPoly::from_ints({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})});
  CHECK(lehmer.verdict == Verdict::NonExpansive);

  CHECK_THROWS_WITH_AS(decide_algebraic_unit({UniPoly::from_ints({-2, 1})}),
                       "xi not a unit; M != Z[xi, xi^-1] hypothesis violated", error);
}

TEST_CASE("both decision routes agree on random unit polynomials") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-4, 4), deg(1, 6), pick(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    int d = deg(rng);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    c[0] = pick(rng) ? 1 : -1;
    c[static_cast<size_t>(d)] = 1;
    for (int k = 1; k < d; ++k) c[static_cast<size_t>(k)] = coeff(rng);
    UniPoly p{std::vector<Rat>(c)};

    auto route_a = decide_algebraic_unit({p});
    IdealSpec spec;
    spec.generators.push_back(parse_polynomial(p.to_string("x1")));
    spec.ambient_vars.insert(1);
    auto route_b = decide_cyclic(spec);
    CHECK(route_a.verdict == route_b.verdict);
  }
}
