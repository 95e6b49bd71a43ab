#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "expansive/problem.hpp"

using namespace expansive;

namespace {
IdealSpec ideal(std::initializer_list<const char*> gens) {
  std::vector<LaurentPoly> v;
  for (const char* s : gens) v.push_back(parse_polynomial(s));
  return IdealSpec::of(std::move(v));
}
}  // namespace

TEST_CASE("cyclic verdicts on the bundled examples") {
  CHECK(decide_cyclic(ideal({"x1 - 2"})).verdict == Verdict::Expansive);
  CHECK(decide_cyclic(ideal({"x1 - 1"})).verdict == Verdict::NonExpansive);
  CHECK(decide_cyclic(ideal({"1 + x1 + x2"})).verdict == Verdict::NonExpansive);
  CHECK(decide_cyclic(ideal({"x1 - 2", "x2 - 3", "x3 - 5"})).verdict == Verdict::Expansive);
}

TEST_CASE("unit annihilator gives the trivial module") {
  Decision d = decide_cyclic(ideal({"x1^3"}));
  CHECK(d.verdict == Verdict::Expansive);
  REQUIRE(d.certificate.has_value());
  const auto* t = std::get_if<TrivialCert>(&*d.certificate);
  REQUIRE(t != nullptr);
  CHECK(t->kind == TrivialCert::TrivialModule);
}

TEST_CASE("expansive decisions carry replayable certificates") {
  for (auto gens : {std::vector<const char*>{"x1 - 2"},
                    std::vector<const char*>{"x1 - 2", "x2 - 3"},
                    std::vector<const char*>{"x1 + x2 - 3"}}) {
    std::vector<LaurentPoly> v;
    for (const char* s : gens) v.push_back(parse_polynomial(s));
    IdealSpec spec = IdealSpec::of(v);
    Decision d = decide_cyclic(spec);
    REQUIRE(d.verdict == Verdict::Expansive);
    REQUIRE(d.certificate.has_value());
    auto [pruned, dropped] = prune_free_variables(spec);
    CHECK(replay_certificate(*d.certificate, pruned));
  }
}

TEST_CASE("non-expansive decisions carry verified witnesses") {
  Decision d = decide_cyclic(ideal({"x1 - 1"}));
  REQUIRE(d.witness.has_value());
  CHECK(d.witness_exact);
  CHECK(verify_witness({parse_polynomial("x1 - 1")}, *d.witness));
}

TEST_CASE("the module verdict is the conjunction over generators") {
  ModuleSpec both = ModuleSpec::of({ideal({"x1 - 2"}), ideal({"x1 - 3"})});
  CHECK(decide_module(both).verdict == Verdict::Expansive);

  ModuleSpec mixed = ModuleSpec::of({ideal({"x1 - 2"}), ideal({"x1 - 1"})});
  Decision d = decide_module(mixed);
  CHECK(d.verdict == Verdict::NonExpansive);
  CHECK(d.deciding_annihilator == 1);
  REQUIRE(d.witness.has_value());

  ModuleSpec empty;
  CHECK_THROWS_AS(decide_module(empty), error);
}

TEST_CASE("generator order and duplication do not change verdicts") {
  auto base = ideal({"x1 - 2", "x2 - 3", "x3 - 5"});
  auto permuted = ideal({"x3 - 5", "x1 - 2", "x2 - 3"});
  auto duplicated = ideal({"x1 - 2", "x2 - 3", "x3 - 5", "x1 - 2"});
  Verdict v = decide_cyclic(base).verdict;
  CHECK(decide_cyclic(permuted).verdict == v);
  CHECK(decide_cyclic(duplicated).verdict == v);

  auto nbase = ideal({"x1 - 1", "x2 + 1"});
  auto nperm = ideal({"x2 + 1", "x1 - 1"});
  CHECK(decide_cyclic(nbase).verdict == decide_cyclic(nperm).verdict);
}

TEST_CASE("free variables do not change verdicts") {
  IdealSpec plain = ideal({"x1 - 2"});
  IdealSpec padded = plain;
  padded.ambient_vars.insert(7);
  Decision a = decide_cyclic(plain);
  Decision b = decide_cyclic(padded);
  CHECK(a.verdict == b.verdict);
  CHECK(b.pruned_vars == std::vector<int>{7});

  IdealSpec npad = ideal({"x1 - 1"});
  npad.ambient_vars.insert(9);
  CHECK(decide_cyclic(npad).verdict == Verdict::NonExpansive);
}

TEST_CASE("assumptions are recorded") {
  Decision d = decide_cyclic(ideal({"x1 - 2"}));
  CHECK(std::find(d.assumptions.begin(), d.assumptions.end(),
                  "ring homomorphisms are unital") != d.assumptions.end());
}

TEST_CASE("zero annihilator of a nontrivial group is never expansive") {
  IdealSpec zero;
  zero.generators.push_back(LaurentPoly());
  zero.ambient_vars.insert(1);
  CHECK(decide_cyclic(zero).verdict == Verdict::NonExpansive);
}
