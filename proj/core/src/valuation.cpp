#include "expansive/valuation.hpp"

#include <algorithm>

namespace expansive {

namespace {

// Canonical representative of (a, b) up to global sign: leading coefficient
// positive.  (a, b) and (-a, -b) generate the same prime of Z[t].
std::pair<Int, Int> normalize_pair(std::pair<Int, Int> p) {
  if (p.first == 0) throw error("decide_linear_units: degree-1 generator with a = 0");
  if (p.first < 0) {
    p.first = -p.first;
    p.second = -p.second;
  }
  return p;
}

std::vector<std::pair<Int, Int>> normalize_set(const std::vector<std::pair<Int, Int>>& in,
                                               bool include_t, const char* which) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& p : in) out.push_back(normalize_pair(p));
  if (include_t) out.push_back({Int(1), Int(0)});
  std::sort(out.begin(), out.end());
  auto dup = std::adjacent_find(out.begin(), out.end());
  if (dup != out.end())
    throw error(std::string("decide_linear_units: generators in ") + which +
                " are not pairwise distinct up to sign");
  return out;
}

WitnessValue unimodular_from_half_trace(const Rat& c) {
  if (c == 1) return WitnessValue(CycValue::one());
  if (c == -1) return WitnessValue(CycValue::rational(Rat(-1)));
  AlgebraicPoint pt;
  pt.real_poly = UniPoly{-2 * c, Rat(1)};  // w - 2c
  Rat margin = std::min(Rat(2) - 2 * c, 2 * c + Rat(2)) / 2;
  pt.w_lo = 2 * c - margin;
  pt.w_hi = 2 * c + margin;
  pt.imag_sign = 1;
  return WitnessValue(std::move(pt));
}

}  // namespace

Rat quartic_discriminant(const Int& a, const Int& b) {
  if (a == 0) throw error("quartic_discriminant: a must be nonzero");
  Int a2 = a * a, b2 = b * b;
  return Rat(a2 * a2 - 2 * (b2 + 1) * a2 + (b2 - 1) * (b2 - 1));
}

std::vector<std::pair<long, long>> enumerate_nonexpansive_pairs(long bound) {
  if (bound < 1) throw error("enumerate_nonexpansive_pairs: bound must be positive");
  std::vector<std::pair<long, long>> out;
  for (long a = -bound; a <= bound; ++a) {
    if (a == 0) continue;
    for (long b = -bound; b <= bound; ++b)
      if (quartic_discriminant(Int(a), Int(b)) <= 0) out.push_back({a, b});
  }
  return out;
}

ValuationDecision decide_linear_units(const LinearUnitsSpec& spec) {
  ValuationDecision d;
  auto H = normalize_set(spec.H, spec.include_t, "H");
  auto G = normalize_set(spec.G, spec.include_t, "G");
  if (G.empty()) throw error("decide_linear_units: G is empty");
  if (H.size() < 2) throw error("decide_linear_units: H needs at least two generators");
  if (!std::includes(H.begin(), H.end(), G.begin(), G.end()))
    throw error("decide_linear_units: G is not a subset of H");
  if (!spec.include_t)
    d.assumptions.push_back("t is not in H: outside the stated hypotheses");

  if (G.size() < H.size()) {
    std::vector<std::pair<Int, Int>> missing;
    std::set_difference(H.begin(), H.end(), G.begin(), G.end(), std::back_inserter(missing));
    d.verdict = Verdict::NonExpansive;
    d.witness = IrreducibleLocalization{missing.front().first, missing.front().second};
    d.note = "the valuation from localizing at a prime outside G is trivial on G";
    return d;
  }

  // G = H: only the archimedean logarithmic maps t -> z with |z| = 1 remain.
  // |a*z + b| = 1 on the circle pins z + 1/z = 2c with c = (1 - a^2 - b^2) / (2ab).
  std::optional<Rat> common;
  for (const auto& [a, b] : G) {
    if (b == 0) {
      if (a != 1 && a != -1) {
        d.verdict = Verdict::Expansive;
        d.note = "generator a*t with |a| > 1 has no unimodular log-map zero";
        return d;
      }
      continue;  // +-t is modulus 1 everywhere on the circle
    }
    Rat c = (Rat(1) - Rat(a * a) - Rat(b * b)) / (2 * Rat(a) * Rat(b));
    if (!common) {
      common = c;
    } else if (*common != c) {
      d.verdict = Verdict::Expansive;
      d.note = "generators force incompatible values of z + 1/z";
      return d;
    }
  }
  if (!common) {
    d.verdict = Verdict::NonExpansive;
    d.witness = LogMapPoint{Rat(1), WitnessValue(CycValue::one())};
    d.note = "no constraining generator; every unimodular z works";
    return d;
  }
  if (*common < -1 || *common > 1) {
    d.verdict = Verdict::Expansive;
    d.note = "required z + 1/z lies outside [-2, 2]";
    return d;
  }
  for (const auto& [a, b] : G)
    if (b != 0 && Rat(a * a) + Rat(b * b) + 2 * Rat(a * b) * *common - 1 != 0)
      throw error("decide_linear_units: internal identity check failed");
  d.verdict = Verdict::NonExpansive;
  d.witness = LogMapPoint{*common, unimodular_from_half_trace(*common)};
  d.note = "common unimodular z kills every archimedean logarithmic map on G";
  return d;
}

ValuationDecision decide_algebraic_unit(const AlgebraicUnitSpec& spec) {
  const UniPoly& p = spec.minpoly;
  if (p.degree() < 1 || !p.has_integer_coeffs())
    throw error("decide_algebraic_unit: minimal polynomial must be integral of degree >= 1");
  if (p.coeff(0) != 1 && p.coeff(0) != -1)
    throw error("xi not a unit; M != Z[xi, xi^-1] hypothesis violated");

  ValuationDecision d;
  auto cc = unit_circle_root_count(p);
  if (cc.count > 0) {
    auto z = extract_unimodular_root(p);
    if (!z) throw error("decide_algebraic_unit: internal: counted root not isolated");
    d.verdict = Verdict::NonExpansive;
    d.witness = Embedding{*z, std::move(cc.transcript)};
    d.note = "an embedding sends the unit to the circle";
  } else {
    d.verdict = Verdict::Expansive;
    d.certificate = std::move(cc.transcript);
    d.note = "no embedding of the unit has modulus 1";
  }
  return d;
}

}  // namespace expansive
