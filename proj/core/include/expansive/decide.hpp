#pragma once

#include "expansive/torus.hpp"

namespace expansive {

enum class Verdict { Expansive, NonExpansive, Unknown };

const char* verdict_name(Verdict v);

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::optional<TorusWitness> witness;              // NonExpansive, or Unknown candidate
  std::optional<EmptinessCertificate> certificate;  // Expansive
  std::vector<std::string> assumptions;
  std::string note;
  std::vector<int> pruned_vars;   // ambient variables with no constraint
  int deciding_annihilator = -1;  // module case: index that settled the verdict
  long boxes_used = 0;
  bool witness_exact = false;
};

/// Verdict for the cyclic module with the given annihilator ideal: expansive
/// exactly when no unital ring homomorphism to C sends every ambient variable
/// to the unit circle while killing the ideal.
Decision decide_cyclic(const IdealSpec& ideal, const EngineConfig& config = {});

/// A finitely generated module, one annihilator ideal per generator: expansive
/// exactly when every cyclic piece is.
Decision decide_module(const ModuleSpec& module, const EngineConfig& config = {});

}  // namespace expansive
