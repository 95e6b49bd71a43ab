#pragma once

#include <optional>

#include "expansive/certificate.hpp"
#include "expansive/witness.hpp"

namespace expansive {

struct UnitCircleCount {
  int count = 0;
  SturmTranscript transcript;
};

/// Number of distinct roots of f with modulus exactly 1.  Monomial factors
/// x^k are stripped first (they contribute no unimodular roots).  The count
/// is obtained from g = gcd(f, reciprocal f): the roots +-1 directly, the
/// rest through the real transform w = x + 1/x and a Sturm count on (-2, 2).
UnitCircleCount unit_circle_root_count(const UniPoly& f);

/// An exact unimodular root of f, when one exists: tries the rational roots
/// +-1 first, then cyclotomic factors Phi_q | f for phi(q) <= deg f and
/// q <= cyclo_limit, then falls back to an isolated AlgebraicPoint.
std::optional<WitnessValue> extract_unimodular_root(const UniPoly& f, unsigned cyclo_limit = 24);

}  // namespace expansive
