#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "expansive/problem.hpp"
#include "expansive/report.hpp"

using namespace expansive;

namespace {
std::string thrown(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("polynomial grammar") {
  CHECK(parse_polynomial("x1 - 2") == parse_polynomial("-2 + x1"));
  CHECK(parse_polynomial("e(2) - 2*e(1) + 1") == parse_polynomial("x2 - 2*x1 + 1"));
  CHECK(parse_polynomial("x1^-1*x2 + 3").variables() == std::set<int>{1, 2});
  CHECK(parse_polynomial("2x1") == parse_polynomial("2*x1"));
  CHECK(parse_polynomial("x1*x1") == parse_polynomial("x1^2"));
  CHECK(parse_polynomial("x1 - x1").is_zero());
  CHECK(parse_polynomial("0").is_zero());
}

TEST_CASE("polynomial errors carry positions") {
  auto msg = thrown([] { parse_polynomial("x1 +"); });
  CHECK(msg.find("line 1") != std::string::npos);
  CHECK(msg.find("expected a term") != std::string::npos);

  CHECK(thrown([] { parse_polynomial("x1^9999999999"); }).find("overflows") != std::string::npos);
  CHECK(thrown([] { parse_polynomial("e(0)"); }).find("positive") != std::string::npos);
  CHECK(thrown([] { parse_polynomial("x1 $ x2"); }) != "");
  CHECK(thrown([] { parse_polynomial("e(n+1)"); }).find("not allowed") != std::string::npos);
}

TEST_CASE("printing and parsing are inverse on a generated corpus") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9), var(1, 3), expo(-3, 3), nterms(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly f;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
      ExponentVector m;
      int nv = var(rng);
      for (int v = 1; v <= nv; ++v) {
        int e = expo(rng);
        if (e != 0) m.set(v, e);
      }
      f.add_term(m, Int(coeff(rng)));
    }
    CHECK(parse_polynomial(f.to_string()) == f);
  }
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-2") == Rat(-2));
  CHECK(parse_rational("0.25") == Rat(1, 4));
  CHECK(parse_rational("-1/6") == Rat(-1, 6));
  CHECK(thrown([] { parse_rational("1/0"); }).find("zero denominator") != std::string::npos);
  CHECK(thrown([] { parse_rational("1x"); }).find("trailing") != std::string::npos);
}

TEST_CASE("witness values") {
  CHECK(std::get<CycValue>(parse_witness_value("1")).is_one());
  CHECK(std::get<CycValue>(parse_witness_value("-1")).as_rational() == Rat(-1));
  CHECK(std::get<CycValue>(parse_witness_value("zeta(6)")) ==
        std::get<CycValue>(parse_witness_value("turn(1/6)")));
  CHECK(std::get<CycValue>(parse_witness_value("zeta(6)^5")) ==
        std::get<CycValue>(parse_witness_value("turn(-1/6)")));
  CHECK(std::get<CycValue>(parse_witness_value("zeta(5)^7")) ==
        std::get<CycValue>(parse_witness_value("zeta(5)^2")));

  auto a = parse_witness_value("angle(0.3)");
  REQUIRE(std::holds_alternative<NumericCandidate>(a));
  CHECK(std::get<NumericCandidate>(a).turn == Rat(3, 10));

  CHECK(thrown([] { parse_witness_value("2"); }) != "");
  CHECK(thrown([] { parse_witness_value("zeta(0)"); }).find("positive") != std::string::npos);
  CHECK(thrown([] { parse_witness_value("turn(1/6"); }) != "");
}

TEST_CASE("cyclic problem files") {
  auto pf = parse_problem(
      "[problem]\n"
      "kind = \"cyclic\"\n"
      "annihilator = [\"x1 - 2\"]  # a comment\n");
  CHECK(pf.kind == ProblemKind::Cyclic);
  REQUIRE(pf.annihilators.size() == 1);
  CHECK(pf.annihilators[0].generators[0] == parse_polynomial("x1 - 2"));
  CHECK(decide_module(pf.module()).verdict == Verdict::Expansive);
}

TEST_CASE("module problem files with several annihilators") {
  auto pf = parse_problem(
      "[problem]\n"
      "kind = \"module\"\n"
      "variables = [\"x1\", \"x2\"]\n"
      "[annihilator]\n"
      "generators = [\"x1 - 2\", \"x2 - 3\"]\n"
      "[annihilator]\n"
      "generators = [\"x1 - 1\"]\n");
  CHECK(pf.kind == ProblemKind::Module);
  CHECK(pf.annihilators.size() == 2);
  CHECK(pf.declared_vars == std::set<int>{1, 2});
  auto d = decide_module(pf.module());
  CHECK(d.verdict == Verdict::NonExpansive);
  CHECK(d.deciding_annihilator == 1);
}

TEST_CASE("linear-units problem files") {
  auto pf = parse_problem(
      "[problem]\n"
      "kind = \"linear-units\"\n"
      "H = [\"2t + 1\"]\n"
      "G = [\"2t + 1\"]\n"
      "include_t = true\n");
  REQUIRE(pf.linear_units.has_value());
  CHECK(decide_linear_units(*pf.linear_units).verdict == Verdict::NonExpansive);
}

TEST_CASE("algebraic-unit problem files") {
  auto pf = parse_problem(
      "[problem]\n"
      "kind = \"algebraic-unit\"\n"
      "minpoly = \"x1^2 - x1 - 1\"\n");
  REQUIRE(pf.algebraic_unit.has_value());
  CHECK(decide_algebraic_unit(*pf.algebraic_unit).verdict == Verdict::Expansive);
}

TEST_CASE("witness-check files with a family") {
  auto pf = parse_problem(
      "[problem]\n"
      "kind = \"witness-check\"\n"
      "[family]\n"
      "generator = \"e(n+1) - (n+1)*e(1) + n\"\n"
      "expand = 4\n"
      "[witness]\n"
      "all = \"1\"\n");
  REQUIRE(pf.family.has_value());
  CHECK(pf.family_expand == 4);
  CHECK(pf.all_ones);
  CHECK(verify_witness(*pf.family, *pf.witness));
}

TEST_CASE("simulate files") {
  auto pf = parse_problem(
      "[problem]\n"
      "kind = \"simulate\"\n"
      "annihilator = [\"x1^2 - x1 + 1\"]\n"
      "[witness]\n"
      "x1 = \"turn(1/6)\"\n"
      "[simulate]\n"
      "window = 25\n"
      "delta = \"1/40\"\n");
  CHECK(pf.window == 25);
  REQUIRE(pf.delta.has_value());
  CHECK(*pf.delta == Rat(1, 40));
  REQUIRE(pf.witness.has_value());
  CHECK(std::get<CycValue>(pf.witness->assignments.at(1)) == CycValue::root_power(6, 1));
}

TEST_CASE("problem file errors") {
  CHECK(thrown([] { parse_problem("kind = \"cyclic\"\n"); }).find("outside any section") !=
        std::string::npos);
  CHECK(thrown([] { parse_problem("[family]\ngenerator = \"e(1)\"\n"); }).find("[problem]") !=
        std::string::npos);
  CHECK(thrown([] { parse_problem("[problem]\nannihilator = [\"x1 - 1\"]\n"); })
            .find("missing 'kind'") != std::string::npos);
  CHECK(thrown([] {
          parse_problem("[problem]\nkind = \"cyclic\"\nkind = \"module\"\n");
        }).find("duplicate key") != std::string::npos);

  auto msg = thrown([] {
    parse_problem("[problem]\nkind = \"cyclic\"\nannihilator = [\"x1 +\"]\n");
  });
  CHECK(msg.find("line 3") != std::string::npos);

  CHECK(thrown([] { parse_problem("[problem]\nkind = \"cyclic\"\n[bogus]\n"); })
            .find("unknown section") != std::string::npos);
  CHECK(thrown([] {
          parse_problem("[problem]\nkind = \"cyclic\"\nannihilator = [\"x1 - 1\"]\nH = [\"t\"]\n");
        }).find("linear-units") != std::string::npos);
  CHECK(thrown([] { parse_problem("[problem]\nkind = \"cyclic\"\n"); })
            .find("exactly one annihilator") != std::string::npos);
}

TEST_CASE("reports validate against the bundled schema") {
  auto schema = nlohmann::json::parse(report_schema_json());
  CHECK(schema.contains("properties"));

  EngineConfig cfg;
  std::string why;

  auto exp = decision_report(decide_cyclic(IdealSpec::of({parse_polynomial("x1 - 2")})), cfg, 1.0);
  CHECK(validate_report(exp, &why));
  CHECK(exp["verdict"] == "expansive");
  CHECK(exp["schema"] == "expansive-report/1");

  auto nonexp =
      decision_report(decide_cyclic(IdealSpec::of({parse_polynomial("x1 - 1")})), cfg, 1.0);
  CHECK(validate_report(nonexp, &why));
  CHECK(nonexp["verdict"] == "non_expansive");

  auto cover = decision_report(
      decide_cyclic(IdealSpec::of({parse_polynomial("x1 + x2 - 3")})), cfg, 1.0);
  CHECK(validate_report(cover, &why));

  auto val = valuation_report(
      decide_linear_units(LinearUnitsSpec{{{Int(2), Int(1)}}, {{Int(2), Int(1)}}, true}), 1.0);
  CHECK(validate_report(val, &why));

  auto broken = exp;
  broken["verdict"] = "bogus";
  CHECK(!validate_report(broken, &why));
  CHECK(!why.empty());
  broken = exp;
  broken.erase("schema");
  CHECK(!validate_report(broken, nullptr));
}
