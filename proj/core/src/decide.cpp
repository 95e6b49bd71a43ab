#include "expansive/decide.hpp"

namespace expansive {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Expansive: return "expansive";
    case Verdict::NonExpansive: return "non_expansive";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

Decision decide_cyclic(const IdealSpec& ideal, const EngineConfig& config) {
  Decision d;
  d.assumptions.push_back("ring homomorphisms are unital");

  for (size_t i = 0; i < ideal.generators.size(); ++i)
    if (ideal.generators[i].is_unit_monomial()) {
      d.verdict = Verdict::Expansive;
      d.certificate = TrivialCert{TrivialCert::TrivialModule, static_cast<int>(i)};
      d.note = "annihilator contains a unit; the module is trivial";
      return d;
    }

  auto [pruned, dropped] = prune_free_variables(ideal);
  d.pruned_vars = dropped;
  if (!dropped.empty())
    d.assumptions.push_back("unconstrained variables are sent to 1 by the witness");

  TorusResult t = torus_intersection(pruned, config);
  d.boxes_used = t.boxes_used;
  d.note = t.note;
  switch (t.status) {
    case TorusResult::Empty:
      d.verdict = Verdict::Expansive;
      d.certificate = std::move(t.certificate);
      break;
    case TorusResult::Nonempty:
      d.witness = std::move(t.witness);
      d.witness_exact = t.witness_exact;
      if (t.witness_exact) {
        std::vector<LaurentPoly> gens;
        for (const auto& g : pruned.generators)
          if (!g.is_zero()) gens.push_back(g);
        if (verify_witness(gens, *d.witness)) {
          d.verdict = Verdict::NonExpansive;
        } else {
          d.verdict = Verdict::Unknown;
          d.note = "internal: exact witness failed verification";
        }
      } else {
        // A certified-residual candidate is strong evidence but not a proof.
        d.verdict = Verdict::Unknown;
        d.note += "; numeric witness not exactly verified";
      }
      break;
    case TorusResult::Unknown:
      d.verdict = Verdict::Unknown;
      break;
  }
  return d;
}

Decision decide_module(const ModuleSpec& module, const EngineConfig& config) {
  module.validate();
  Decision out;
  out.assumptions.push_back("ring homomorphisms are unital");
  if (module.annihilators.empty()) {
    out.verdict = Verdict::Expansive;
    out.certificate = TrivialCert{TrivialCert::TrivialModule, -1};
    out.note = "no generators: the zero module";
    return out;
  }
  bool any_unknown = false;
  for (size_t i = 0; i < module.annihilators.size(); ++i) {
    Decision d = decide_cyclic(module.annihilators[i], config);
    out.boxes_used += d.boxes_used;
    if (d.verdict == Verdict::NonExpansive) {
      d.deciding_annihilator = static_cast<int>(i);
      d.boxes_used = out.boxes_used;
      return d;
    }
    if (d.verdict == Verdict::Unknown) {
      any_unknown = true;
      out.note = d.note;
      out.deciding_annihilator = static_cast<int>(i);
    } else if (!any_unknown) {
      // keep the last expansiveness certificate for reporting
      out.certificate = std::move(d.certificate);
      out.deciding_annihilator = static_cast<int>(i);
    }
  }
  out.verdict = any_unknown ? Verdict::Unknown : Verdict::Expansive;
  if (!any_unknown) out.note = "every cyclic piece is expansive";
  return out;
}

}  // namespace expansive
