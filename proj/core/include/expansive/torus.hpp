#pragma once

#include "expansive/certificate.hpp"
#include "expansive/unit_circle.hpp"
#include "expansive/witness.hpp"

namespace expansive {

struct EngineConfig {
  int max_depth = 40;            // total bisections along any root-to-leaf path
  long box_budget = 1'000'000;   // boxes examined before giving up
  double residual_tol = 1e-9;    // certified residual bound for numeric witnesses
  unsigned cyclo_order_limit = 24;  // cyclotomic search order bound
};

struct TorusResult {
  enum Status { Empty, Nonempty, Unknown } status = Unknown;
  std::optional<TorusWitness> witness;            // Nonempty
  std::optional<EmptinessCertificate> certificate;  // Empty
  std::string note;
  long boxes_used = 0;
  bool witness_exact = false;
};

/// Does the common zero set of the ideal meet the unit torus?  Exact for
/// ideals in at most two effective variables; in general branch-and-bound
/// over angle boxes, which may return Unknown on budget exhaustion.
/// Expects prune_free_variables to have been applied.
TorusResult torus_intersection(const IdealSpec& ideal, const EngineConfig& config = {});

}  // namespace expansive
