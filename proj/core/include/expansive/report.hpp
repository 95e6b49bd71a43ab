#pragma once

#include <nlohmann/json.hpp>

#include "expansive/decide.hpp"
#include "expansive/harness.hpp"
#include "expansive/valuation.hpp"

namespace expansive {

nlohmann::json witness_json(const TorusWitness& w);

/// Certificates serialize fully except interval covers, which are summarized
/// (node counts plus a digest) unless full_cover is set.
nlohmann::json certificate_json(const EmptinessCertificate& cert, bool full_cover = false);

nlohmann::json decision_report(const Decision& d, const EngineConfig& config, double elapsed_ms,
                               bool full_cover = false);
nlohmann::json valuation_report(const ValuationDecision& d, double elapsed_ms);
nlohmann::json witness_check_report(bool verified, const std::string& detail,
                                    const TorusWitness& w, double elapsed_ms);
nlohmann::json simulate_report(const WitnessSequence& seq, const ResidualReport& residuals,
                               const ExpansivenessConstant& ec, double tolerance,
                               double elapsed_ms);

/// The stable report schema, as a JSON document.
const char* report_schema_json();

/// Structural validation against the bundled schema.
bool validate_report(const nlohmann::json& report, std::string* why = nullptr);

}  // namespace expansive
