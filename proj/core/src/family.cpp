#include "expansive/presentation.hpp"

namespace expansive {

LaurentPoly GeneratorFamily::instantiate(int n) const {
  if (n < 1) throw error("family parameter n must be >= 1");
  LaurentPoly out;
  for (const auto& term : terms) {
    Rat c = term.coeff(Rat(n));
    if (denominator(c) != 1) throw error("family coefficient not integral");
    ExponentVector m;
    for (const auto& [idx, exp] : term.exponents) {
      int var = idx.symbolic ? n + idx.offset : idx.offset;
      if (var < 1) throw error("family instantiation: variable index < 1");
      m.set(var, m.exponent(var) + exp);
    }
    out.add_term(m, numerator(c));
  }
  return out;
}

std::vector<LaurentPoly> family_expand(const GeneratorFamily& family, int n_max) {
  if (n_max < 1) throw error("family_expand: n_max must be >= 1");
  std::vector<LaurentPoly> out;
  out.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) out.push_back(family.instantiate(n));
  return out;
}

UniPoly augmentation_poly(const GeneratorFamily& family) {
  UniPoly s;
  for (const auto& term : family.terms) s = s + term.coeff;
  return s;
}

}  // namespace expansive
