#pragma once

#include <map>
#include <optional>
#include <variant>

#include "expansive/cyclotomic.hpp"
#include "expansive/presentation.hpp"

namespace expansive {

/// A unimodular algebraic number z given through w = z + 1/z: w is the unique
/// root of `real_poly` in the isolating interval (w_lo, w_hi) inside (-2, 2),
/// and z = (w + imag_sign*i*sqrt(4 - w^2)) / 2.  |z| = 1 holds by
/// construction since w is real with |w| < 2.
struct AlgebraicPoint {
  UniPoly real_poly;
  Rat w_lo, w_hi;
  int imag_sign = 1;  // +1 or -1

  double turn() const;  // angle as a fraction of a full turn, numerically
};

/// An uncertified unimodular candidate: an angle (fraction of a turn) plus
/// the certified residual bound obtained for it.
struct NumericCandidate {
  Rat turn;
  Rat residual_bound;
};

using WitnessValue = std::variant<CycValue, AlgebraicPoint, NumericCandidate>;

/// Assignment of unit-modulus values to variables; unassigned ambient
/// variables implicitly map to 1.
struct TorusWitness {
  std::map<int, WitnessValue> assignments;

  bool is_exact() const;  // no NumericCandidate entries
  double turn_of(int var) const;  // 0 for unassigned
};

/// Exact check that every generator vanishes under the assignment.  Throws
/// for NumericCandidate entries ("exact verification unavailable") and for
/// combinations of algebraic values that do not live in one stated field
/// ("incomparable witness kinds").
bool verify_witness(const std::vector<LaurentPoly>& generators, const TorusWitness& witness);

/// Family form: all-ones witnesses are decided exactly through the
/// augmentation identity; other witnesses are not decidable from finite data.
bool verify_witness(const GeneratorFamily& family, const TorusWitness& witness);

/// Evaluate a Laurent polynomial at an all-cyclotomic assignment, exactly.
CycValue evaluate_cyclotomic(const LaurentPoly& f, const std::map<int, CycValue>& assignment);

}  // namespace expansive
