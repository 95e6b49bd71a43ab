#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "expansive/problem.hpp"
#include "expansive/report.hpp"

namespace {

using namespace expansive;
using nlohmann::json;

constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitEngine = 65;
constexpr int kExitMismatch = 66;

struct Options {
  long budget = 1'000'000;
  double tolerance = 1e-9;
  int depth = 40;
  int window = 0;      // 0 = use the file's value
  std::string delta;   // empty = use the file's value or epsilon/2
  bool full_cover = false;
};

EngineConfig engine_config(const Options& opt) {
  EngineConfig cfg;
  cfg.box_budget = opt.budget;
  cfg.residual_tol = opt.tolerance;
  cfg.max_depth = opt.depth;
  return cfg;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<LaurentPoly> problem_generators(const ProblemFile& pf) {
  std::vector<LaurentPoly> gens;
  if (pf.family) {
    gens = family_expand(*pf.family, pf.family_expand);
  } else {
    for (const auto& a : pf.annihilators)
      for (const auto& g : a.generators) gens.push_back(g);
  }
  return gens;
}

std::pair<json, Verdict> run_verify(const ProblemFile& pf, const Options&) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok;
  std::string detail;
  try {
    ok = pf.family ? verify_witness(*pf.family, *pf.witness)
                   : verify_witness(problem_generators(pf), *pf.witness);
    detail = ok ? "witness annihilates every generator"
                : "witness does not annihilate some generator";
  } catch (const error& ex) {
    ok = false;
    detail = ex.what();
  }
  return {witness_check_report(ok, detail, *pf.witness, ms_since(t0)),
          ok ? Verdict::NonExpansive : Verdict::Unknown};
}

std::pair<json, Verdict> run_simulate(const ProblemFile& pf, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto gens = problem_generators(pf);
  auto ec = expansiveness_constant(gens);

  Window window;
  window.radius = opt.window > 0 ? opt.window : pf.window;
  std::set<int> vars;
  for (const auto& g : gens)
    for (int v : g.variables()) vars.insert(v);
  for (const auto& [v, val] : pf.witness->assignments) vars.insert(v);
  window.vars.assign(vars.begin(), vars.end());

  Rat delta = !opt.delta.empty() ? parse_rational(opt.delta)
              : pf.delta         ? *pf.delta
                                 : ec.epsilon / 2;

  auto seq = build_witness_sequence(gens, *pf.witness, delta, window);
  auto residuals = check_relations(seq.grid, gens, opt.tolerance);
  bool confirmed = residuals.max_residual <= opt.tolerance;
  return {simulate_report(seq, residuals, ec, opt.tolerance, ms_since(t0)),
          confirmed ? Verdict::NonExpansive : Verdict::Unknown};
}

std::pair<json, Verdict> run_problem(const ProblemFile& pf, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  switch (pf.kind) {
    case ProblemKind::Cyclic: {
      Decision d = decide_cyclic(pf.module().annihilators[0], engine_config(opt));
      return {decision_report(d, engine_config(opt), ms_since(t0), opt.full_cover), d.verdict};
    }
    case ProblemKind::Module: {
      Decision d = decide_module(pf.module(), engine_config(opt));
      return {decision_report(d, engine_config(opt), ms_since(t0), opt.full_cover), d.verdict};
    }
    case ProblemKind::LinearUnits: {
      ValuationDecision d = decide_linear_units(*pf.linear_units);
      return {valuation_report(d, ms_since(t0)), d.verdict};
    }
    case ProblemKind::AlgebraicUnit: {
      ValuationDecision d = decide_algebraic_unit(*pf.algebraic_unit);
      return {valuation_report(d, ms_since(t0)), d.verdict};
    }
    case ProblemKind::WitnessCheck:
      return run_verify(pf, opt);
    case ProblemKind::Simulate:
      return run_simulate(pf, opt);
  }
  throw error("unreachable problem kind");
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Expansive: return 0;
    case Verdict::NonExpansive: return 1;
    case Verdict::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Fixture {
  const char* name;
  const char* expected;
  const char* text;
};

const Fixture kFixtures[] = {
    {"cyclic-e1-minus-2", "expansive",
     "[problem]\nkind = cyclic\nannihilator = [\"x1 - 2\"]\n"},
    {"trivial-module", "expansive", "[problem]\nkind = cyclic\nannihilator = [\"x1\"]\n"},
    {"cyclic-x1-minus-1", "non_expansive",
     "[problem]\nkind = cyclic\nannihilator = [\"x1 - 1\"]\n"},
    {"cyclic-1-x1-x2", "non_expansive",
     "[problem]\nkind = cyclic\nannihilator = [\"1 + x1 + x2\"]\n"},
    {"chain-ideal-n2", "expansive",
     "[problem]\nkind = cyclic\nannihilator = [\"x1 - 2\", \"x2 - 3\"]\n"},
    {"chain-ideal-n3", "expansive",
     "[problem]\nkind = cyclic\nannihilator = [\"x1 - 2\", \"x2 - 3\", \"x3 - 5\"]\n"},
    {"chain-ideal-n4", "expansive",
     "[problem]\nkind = cyclic\nannihilator = [\"x1 - 2\", \"x2 - 3\", \"x3 - 5\", \"x4 - 7\"]\n"},
    {"chain-ideal-n5", "expansive",
     "[problem]\nkind = cyclic\nannihilator = [\"x1 - 2\", \"x2 - 3\", \"x3 - 5\", \"x4 - 7\", "
     "\"x5 - 11\"]\n"},
    {"example-3-4", "non_expansive",
     "[problem]\nkind = witness-check\n\n[family]\ngenerator = \"e(n+1) - (n+1)*e(1) + n\"\n"
     "expand = 10\n\n[witness]\nall = \"1\"\n"},
    {"module-coprime-pair", "expansive",
     "[problem]\nkind = module\n\n[annihilator]\ngenerators = [\"x1 - 2\"]\n\n[annihilator]\n"
     "generators = [\"x1 - 3\"]\n"},
    {"module-mixed-pair", "non_expansive",
     "[problem]\nkind = module\n\n[annihilator]\ngenerators = [\"x1 - 2\"]\n\n[annihilator]\n"
     "generators = [\"x1 - 1\"]\n"},
    {"qt-full-2t1", "non_expansive",
     "[problem]\nkind = linear-units\nH = [\"2*t + 1\"]\nG = [\"2*t + 1\"]\n"},
    {"qt-full-3t1", "expansive",
     "[problem]\nkind = linear-units\nH = [\"3*t + 1\"]\nG = [\"3*t + 1\"]\n"},
    {"qt-missing-irreducible", "non_expansive",
     "[problem]\nkind = linear-units\nH = [\"t + 1\", \"t + 2\"]\nG = [\"t + 1\"]\n"},
    {"qt-two-constraints", "non_expansive",
     "[problem]\nkind = linear-units\nH = [\"2*t + 1\", \"3*t + 2\"]\nG = [\"2*t + 1\", "
     "\"3*t + 2\"]\n"},
    {"algebraic-golden", "expansive",
     "[problem]\nkind = algebraic-unit\nminpoly = \"x1^2 - x1 - 1\"\n"},
    {"algebraic-gaussian", "non_expansive",
     "[problem]\nkind = algebraic-unit\nminpoly = \"x1^2 + 1\"\n"},
    {"algebraic-lehmer", "non_expansive",
     "[problem]\nkind = algebraic-unit\nminpoly = \"x1^10 + x1^9 - x1^7 - x1^6 - x1^5 - x1^4 - "
     "x1^3 + x1 + 1\"\n"},
    {"simulate-sixth-root", "non_expansive",
     "[problem]\nkind = simulate\nannihilator = [\"x1^2 - x1 + 1\"]\n\n[witness]\n"
     "x1 = \"turn(1/6)\"\n\n[simulate]\nwindow = 50\ndelta = \"1/30\"\n"},
};

int run_fixtures(const Options& opt) {
  int failures = 0;
  for (const auto& fx : kFixtures) {
    std::string got;
    try {
      auto [report, verdict] = run_problem(parse_problem(fx.text), opt);
      got = verdict_name(verdict);
    } catch (const std::exception& ex) {
      got = std::string("error: ") + ex.what();
    }
    bool ok = got == fx.expected;
    if (!ok) ++failures;
    std::cout << (ok ? "ok   " : "FAIL ") << fx.name << ": " << got;
    if (!ok) std::cout << " (expected " << fx.expected << ")";
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all fixtures passed" : "fixture failures: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expansiveness of algebraic actions: decision, certificates, witnesses"};
  app.require_subcommand(1);

  Options opt;
  std::string path;
  long bound = 10;

  auto add_engine_flags = [&](CLI::App* cmd) {
    cmd->add_option("--budget", opt.budget, "branch-and-bound box budget");
    cmd->add_option("--tolerance", opt.tolerance, "certified residual tolerance");
    cmd->add_option("--depth", opt.depth, "maximum subdivision depth");
  };

  auto* decide = app.add_subcommand("decide", "decide expansiveness for a problem file");
  decide->add_option("file", path, "problem file")->required();
  add_engine_flags(decide);
  decide->add_flag("--full-cover", opt.full_cover, "embed full interval-cover trees in reports");

  auto* verify = app.add_subcommand("verify", "verify a witness from a problem file");
  verify->add_option("file", path, "problem file")->required();

  auto* simulate = app.add_subcommand("simulate", "build and check a witness sequence");
  simulate->add_option("file", path, "problem file")->required();
  simulate->add_option("--window", opt.window, "window radius N");
  simulate->add_option("--delta", opt.delta, "amplitude (rational)");
  simulate->add_option("--tolerance", opt.tolerance, "residual tolerance");

  auto* quartic = app.add_subcommand("enumerate-quartic", "pairs (a,b) with |a z + b| = 1 solvable");
  quartic->add_option("--bound", bound, "box bound")->required();

  auto* fixtures = app.add_subcommand("fixtures", "run the bundled example suite");
  add_engine_flags(fixtures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (fixtures->parsed()) return run_fixtures(opt);
    if (quartic->parsed()) {
      auto pairs = enumerate_nonexpansive_pairs(bound);
      nlohmann::json arr = nlohmann::json::array();
      for (auto [a, b] : pairs) arr.push_back({a, b});
      nlohmann::json out{{"bound", bound}, {"count", pairs.size()}, {"pairs", arr}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    ProblemFile pf = parse_problem(read_file(path));
    std::pair<nlohmann::json, Verdict> result;
    if (verify->parsed()) {
      if (!pf.witness) throw error("verify needs a [witness] section");
      result = run_verify(pf, opt);
    } else if (simulate->parsed()) {
      if (!pf.witness) throw error("simulate needs a [witness] section");
      result = run_simulate(pf, opt);
    } else {
      result = run_problem(pf, opt);
    }
    std::cout << result.first.dump(2) << "\n";
    return verdict_exit(result.second);
  } catch (const expansive::error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitEngine;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitEngine;
  }
}
