#include "expansive/report.hpp"

namespace expansive {

using nlohmann::json;

namespace {

std::string rat_str(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

json transcript_json(const SturmTranscript& t) {
  return json{{"input", t.input.to_string()},
              {"self_inversive", t.self_inversive.to_string()},
              {"transform", t.transform.to_string("w")},
              {"roots_at_one", t.roots_at_one},
              {"roots_at_minus_one", t.roots_at_minus_one},
              {"interior_count", t.interior_count},
              {"total", t.total},
              {"note", t.note}};
}

json value_json(const WitnessValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CycValue>) {
          json j{{"type", "cyclotomic"}, {"order", x.order()}, {"rep", x.rep().to_string("zeta")}};
          if (auto t = x.exact_turn()) j["turn"] = rat_str(*t);
          return j;
        } else if constexpr (std::is_same_v<T, AlgebraicPoint>) {
          return json{{"type", "algebraic"},
                      {"real_poly", x.real_poly.to_string("w")},
                      {"w_lo", rat_str(x.w_lo)},
                      {"w_hi", rat_str(x.w_hi)},
                      {"imag_sign", x.imag_sign},
                      {"turn", x.turn()}};
        } else {
          return json{{"type", "numeric"},
                      {"turn", to_double(x.turn)},
                      {"residual_bound", to_double(x.residual_bound)}};
        }
      },
      v);
}

std::uint64_t fnv1a(const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ULL;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

json witness_json(const TorusWitness& w) {
  json a = json::object();
  for (const auto& [var, val] : w.assignments) a["x" + std::to_string(var)] = value_json(val);
  return json{{"assignments", a}};
}

json certificate_json(const EmptinessCertificate& cert, bool full_cover) {
  return std::visit(
      [&](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, TrivialCert>) {
          const char* sub = c.kind == TrivialCert::TrivialModule  ? "trivial-module"
                            : c.kind == TrivialCert::EmptyAmbient ? "empty-ambient"
                                                                  : "nonzero-constant";
          return json{{"kind", "trivial"}, {"case", sub}, {"generator_index", c.generator_index}};
        } else if constexpr (std::is_same_v<T, SturmTranscript>) {
          json j = transcript_json(c);
          j["kind"] = "sturm-transcript";
          return j;
        } else if constexpr (std::is_same_v<T, ResultantChain>) {
          json elims = json::array();
          for (const auto& e : c.eliminants) elims.push_back(e.to_string());
          return json{{"kind", "resultant-chain"},
                      {"base_var", c.base_var},
                      {"eliminated_var", c.eliminated_var},
                      {"eliminants", elims},
                      {"common", c.common.to_string()},
                      {"circle_count", transcript_json(c.circle_count)}};
        } else {  // IntervalCover
          size_t leaves = 0;
          for (const auto& n : c.nodes)
            if (n.split_dim < 0) ++leaves;
          json j{{"kind", "interval-cover"},
                 {"vars", c.vars},
                 {"nodes", c.nodes.size()},
                 {"leaves", leaves},
                 {"digest", fnv1a(c.nodes.data(), c.nodes.size() * sizeof(IntervalCover::Node))}};
          if (full_cover) {
            json tree = json::array();
            for (const auto& n : c.nodes) tree.push_back(json::array({n.split_dim, n.excluded_by}));
            j["tree"] = tree;
          }
          return j;
        }
      },
      cert);
}

namespace {

json base_report(Verdict v, const std::vector<std::string>& assumptions, const std::string& note,
                 double elapsed_ms) {
  return json{{"schema", "expansive-report/1"}, {"verdict", verdict_name(v)},
              {"evidence", json::object()},    {"assumptions", assumptions},
              {"parameters", json::object()},  {"note", note},
              {"timing_ms", elapsed_ms}};
}

}  // namespace

json decision_report(const Decision& d, const EngineConfig& config, double elapsed_ms,
                     bool full_cover) {
  json r = base_report(d.verdict, d.assumptions, d.note, elapsed_ms);
  r["parameters"] = json{{"max_depth", config.max_depth},
                         {"box_budget", config.box_budget},
                         {"residual_tol", config.residual_tol},
                         {"cyclo_order_limit", config.cyclo_order_limit}};
  json& ev = r["evidence"];
  if (d.certificate) ev["certificate"] = certificate_json(*d.certificate, full_cover);
  if (d.witness) {
    ev["witness"] = witness_json(*d.witness);
    ev["witness_exact"] = d.witness_exact;
  }
  ev["boxes_used"] = d.boxes_used;
  if (!d.pruned_vars.empty()) ev["pruned_vars"] = d.pruned_vars;
  if (d.deciding_annihilator >= 0) ev["deciding_annihilator"] = d.deciding_annihilator;
  return r;
}

json valuation_report(const ValuationDecision& d, double elapsed_ms) {
  json r = base_report(d.verdict, d.assumptions, d.note, elapsed_ms);
  json& ev = r["evidence"];
  if (d.certificate) {
    json j = transcript_json(*d.certificate);
    j["kind"] = "sturm-transcript";
    ev["certificate"] = j;
  }
  if (d.witness) {
    ev["witness"] = std::visit(
        [](const auto& w) -> json {
          using T = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<T, IrreducibleLocalization>) {
            return json{{"kind", "irreducible-localization"}, {"a", w.a.str()}, {"b", w.b.str()}};
          } else if constexpr (std::is_same_v<T, LogMapPoint>) {
            return json{{"kind", "log-map-point"}, {"c", rat_str(w.c)}, {"z", value_json(w.z)}};
          } else {
            return json{{"kind", "embedding"},
                        {"z", value_json(w.z)},
                        {"circle_count", transcript_json(w.count)}};
          }
        },
        *d.witness);
  }
  return r;
}

json witness_check_report(bool verified, const std::string& detail, const TorusWitness& w,
                          double elapsed_ms) {
  json r = base_report(verified ? Verdict::NonExpansive : Verdict::Unknown, {}, detail, elapsed_ms);
  r["evidence"] = json{{"verified", verified}, {"witness", witness_json(w)}};
  return r;
}

json simulate_report(const WitnessSequence& seq, const ResidualReport& residuals,
                     const ExpansivenessConstant& ec, double tolerance, double elapsed_ms) {
  bool confirmed = residuals.max_residual <= tolerance;
  json r = base_report(confirmed ? Verdict::NonExpansive : Verdict::Unknown, {}, residuals.note,
                       elapsed_ms);
  r["parameters"] = json{{"window", seq.grid.radius},
                         {"delta", rat_str(seq.delta)},
                         {"tolerance", tolerance}};
  r["evidence"] = json{{"sup_norm", seq.sup_norm},
                       {"max_residual", residuals.max_residual},
                       {"certified_residual", residuals.certified},
                       {"shifts_checked", residuals.shifts_checked},
                       {"exhaustive", residuals.exhaustive},
                       {"K", ec.K.str()},
                       {"epsilon", rat_str(ec.epsilon)}};
  return r;
}

const char* report_schema_json() {
  return R"({
  "$id": "expansive-report/1",
  "type": "object",
  "required": ["schema", "verdict", "evidence", "assumptions", "parameters", "timing_ms"],
  "properties": {
    "schema": {"const": "expansive-report/1"},
    "verdict": {"enum": ["expansive", "non_expansive", "unknown"]},
    "evidence": {"type": "object"},
    "assumptions": {"type": "array", "items": {"type": "string"}},
    "parameters": {"type": "object"},
    "note": {"type": "string"},
    "timing_ms": {"type": "number"}
  },
  "allOf": [{"if": {"properties": {"verdict": {"enum": ["expansive", "non_expansive"]}}},
             "then": {"properties": {"evidence": {"minProperties": 1}}}}]
})";
}

bool validate_report(const json& report, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!report.is_object()) return fail("report is not an object");
  for (const char* key : {"schema", "verdict", "evidence", "assumptions", "parameters", "timing_ms"})
    if (!report.contains(key)) return fail(std::string("missing key '") + key + "'");
  if (report["schema"] != "expansive-report/1") return fail("unexpected schema id");
  std::string v = report["verdict"].get<std::string>();
  if (v != "expansive" && v != "non_expansive" && v != "unknown")
    return fail("unknown verdict '" + v + "'");
  if (!report["evidence"].is_object()) return fail("evidence is not an object");
  if (!report["assumptions"].is_array()) return fail("assumptions is not an array");
  for (const auto& a : report["assumptions"])
    if (!a.is_string()) return fail("assumption is not a string");
  if (!report["parameters"].is_object()) return fail("parameters is not an object");
  if (!report["timing_ms"].is_number()) return fail("timing_ms is not a number");
  if (report.contains("note") && !report["note"].is_string()) return fail("note is not a string");
  if (v != "unknown" && report["evidence"].empty())
    return fail("non-unknown verdict without evidence");
  return true;
}

}  // namespace expansive
