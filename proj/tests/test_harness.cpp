#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "expansive/harness.hpp"
#include "expansive/problem.hpp"

using namespace expansive;

namespace {
std::vector<LaurentPoly> gens(std::initializer_list<const char*> ss) {
  std::vector<LaurentPoly> v;
  for (const char* s : ss) v.push_back(parse_polynomial(s));
  return v;
}
}  // namespace

TEST_CASE("expansiveness constant") {
  auto c = expansiveness_constant(gens({"x1 - 2"}));
  CHECK(c.K == 3);
  CHECK(c.epsilon == Rat(1, 30));
  CHECK(expansiveness_constant(gens({"1 + x1 + x2"})).K == 3);
  CHECK(expansiveness_constant(gens({"x1 - 1"})).epsilon == Rat(1, 20));
  CHECK(expansiveness_constant(gens({"x1 - 1", "x1 - 2"})).K == 3);
  CHECK_THROWS_AS(expansiveness_constant({}), error);
}

TEST_CASE("window bookkeeping") {
  Window w{50, {1}, 4'000'000};
  CHECK(w.size() == 101);
  CHECK_NOTHROW(w.validate());

  Window big{100, {1, 2, 3, 4, 5}, 4'000'000};
  CHECK_THROWS_AS(big.validate(), error);
  Window zero{0, {1}, 4'000'000};
  CHECK_THROWS_AS(zero.validate(), error);
}

TEST_CASE("grid indexing round-trips") {
  GridValues g = GridValues::constant({1, 2}, 2, 0.0);
  REQUIRE(g.values.size() == 25);
  double v = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) g.set({a, b}, v += 1);
  std::set<long> seen;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) seen.insert(g.index_of({a, b}));
  CHECK(seen.size() == 25);
  CHECK(g.at({-2, -2}) == 1.0);
  CHECK(g.at({2, 2}) == 25.0);
}

TEST_CASE("sixth-root witness sequence satisfies the relation") {
  auto g = gens({"x1^2 - x1 + 1"});
  TorusWitness w;
  w.assignments.emplace(1, CycValue::root_power(6, 1));
  REQUIRE(verify_witness(g, w));

  auto c = expansiveness_constant(g);
  REQUIRE(c.epsilon == Rat(1, 30));
  Window window{50, {1}, 4'000'000};
  auto seq = build_witness_sequence(g, w, c.epsilon, window);
  CHECK(seq.sup_norm <= 1.0 / 30 + 1e-12);
  CHECK(seq.sup_norm > 0.0);
  CHECK(seq.turns.at(1) == doctest::Approx(1.0 / 6));

  auto rep = check_relations(seq.grid, g, 1e-9);
  CHECK(rep.exhaustive);
  CHECK(rep.max_residual <= 1e-9);
}

TEST_CASE("the all-ones witness gives a constant sequence") {
  auto g = gens({"x1 - 1"});
  TorusWitness w;
  w.assignments.emplace(1, CycValue::one());
  Window window{10, {1}, 4'000'000};
  auto seq = build_witness_sequence(g, w, Rat(1, 20), window);
  for (double v : seq.grid.values) CHECK(v == doctest::Approx(0.05));
  auto rep = check_relations(seq.grid, g, 1e-12);
  CHECK(rep.max_residual <= 1e-12);
}

TEST_CASE("delta above the margin is rejected") {
  auto g = gens({"x1 - 1"});
  TorusWitness w;
  w.assignments.emplace(1, CycValue::one());
  Window window{10, {1}, 4'000'000};
  CHECK_THROWS_AS(build_witness_sequence(g, w, Rat(1, 2), window), error);
}

TEST_CASE("expanded family accepts the all-ones witness at small delta") {
  GeneratorFamily fam = parse_family("e(n+1) - (n+1)*e(1) + n");
  auto g = family_expand(fam, 4);
  TorusWitness w;
  for (int i = 1; i <= 5; ++i) w.assignments.emplace(i, CycValue::one());
  auto c = expansiveness_constant(g);
  Window window{1, {1, 2, 3, 4, 5}, 4'000'000};
  auto seq = build_witness_sequence(g, w, c.epsilon, window);
  auto rep = check_relations(seq.grid, g, 1e-9);
  CHECK(rep.max_residual <= 1e-9);
}

TEST_CASE("shifting the orbit relabels values and shrinks the window") {
  auto g = gens({"x1^2 - x1 + 1"});
  TorusWitness w;
  w.assignments.emplace(1, CycValue::root_power(6, 1));
  Window window{20, {1}, 4'000'000};
  auto seq = build_witness_sequence(g, w, Rat(1, 30), window);

  GridValues shifted = shift_orbit(seq.grid, ExponentVector::unit(1, 3));
  CHECK(shifted.radius == 17);
  for (int l = -17; l <= 17; ++l) CHECK(shifted.at({l}) == seq.grid.at({l + 3}));

  auto rep = check_relations(shifted, g, 1e-9);
  CHECK(rep.max_residual <= 1e-9);

  GridValues twice = shift_orbit(shifted, ExponentVector::unit(1, 2));
  GridValues once = shift_orbit(seq.grid, ExponentVector::unit(1, 5));
  CHECK(twice.radius == once.radius);
  CHECK(twice.values == once.values);
}

TEST_CASE("perturbed sequences fail the residual check") {
  auto g = gens({"x1^2 - x1 + 1"});
  TorusWitness w;
  w.assignments.emplace(1, CycValue::root_power(6, 1));
  Window window{20, {1}, 4'000'000};
  auto seq = build_witness_sequence(g, w, Rat(1, 30), window);
  seq.grid.set({0}, seq.grid.at({0}) + 0.01);
  auto rep = check_relations(seq.grid, g, 1e-9);
  CHECK(rep.max_residual > 1e-4);
}

TEST_CASE("sampled checking reports non-exhaustive coverage") {
  auto g = gens({"x1 - 1"});
  TorusWitness w;
  w.assignments.emplace(1, CycValue::one());
  Window window{200, {1}, 4'000'000};
  auto seq = build_witness_sequence(g, w, Rat(1, 20), window);
  auto rep = check_relations(seq.grid, g, 1e-9, 50);
  CHECK(!rep.exhaustive);
  CHECK(rep.shifts_checked <= 50 + 3 + 32);  // base, sweeps, seeded draws
  CHECK(rep.max_residual <= 1e-9);
}

TEST_CASE("export format") {
  auto g = gens({"x1 - 1"});
  TorusWitness w;
  w.assignments.emplace(1, CycValue::one());
  Window window{2, {1}, 4'000'000};
  auto seq = build_witness_sequence(g, w, Rat(1, 20), window);
  std::string text = export_sequence(seq);
  std::istringstream in(text);
  std::string line;
  int rows = 0, headers = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.find('=') != std::string::npos) {
      ++headers;
      continue;
    }
    ++rows;
    std::istringstream row(line);
    long l;
    double v;
    REQUIRE(static_cast<bool>(row >> l >> v));
    CHECK(v == doctest::Approx(seq.grid.at({static_cast<int>(l)})));
  }
  CHECK(rows == 5);
  CHECK(headers >= 4);  // vars, N, delta, one turn per variable
}
