#pragma once

#include "expansive/decide.hpp"

namespace expansive {

/// Multiplicative subgroup of Q(t) generated by degree-1 integer polynomials
/// a*t + b inside the span H; t itself is a member when include_t is set.
struct LinearUnitsSpec {
  std::vector<std::pair<Int, Int>> H;  // pairs (a, b), a != 0
  std::vector<std::pair<Int, Int>> G;  // subset of H
  bool include_t = true;
};

/// Cyclic unit group generated by an algebraic unit xi with the given integer
/// minimal polynomial (constant term +-1).
struct AlgebraicUnitSpec {
  UniPoly minpoly;
};

/// A prime of Z[t] inverted by no element of G: localizing there gives a
/// valuation that is trivial on G.
struct IrreducibleLocalization {
  Int a, b;  // the polynomial a*t + b in H but not in G
};

/// Unimodular z (root of z^2 - 2cz + 1) with |a*z + b| = 1 for every
/// generator: all archimedean logarithmic maps through t -> z vanish on G.
struct LogMapPoint {
  Rat c;
  WitnessValue z;
};

/// A complex embedding sending the unit xi to the unit circle.
struct Embedding {
  WitnessValue z;
  SturmTranscript count;
};

using ValuationWitness = std::variant<IrreducibleLocalization, LogMapPoint, Embedding>;

struct ValuationDecision {
  Verdict verdict = Verdict::Unknown;
  std::optional<ValuationWitness> witness;     // NonExpansive
  std::optional<SturmTranscript> certificate;  // Expansive, algebraic-unit case
  std::vector<std::string> assumptions;
  std::string note;
};

/// a^4 - 2(b^2+1)a^2 + (b^2-1)^2; nonpositive exactly when some unimodular z
/// has |a*z + b| = 1.  Requires a != 0.
Rat quartic_discriminant(const Int& a, const Int& b);

/// All pairs with 1 <= |a| <= bound, |b| <= bound and nonpositive
/// discriminant, in lexicographic order.
std::vector<std::pair<long, long>> enumerate_nonexpansive_pairs(long bound);

ValuationDecision decide_linear_units(const LinearUnitsSpec& spec);

ValuationDecision decide_algebraic_unit(const AlgebraicUnitSpec& spec);

}  // namespace expansive
