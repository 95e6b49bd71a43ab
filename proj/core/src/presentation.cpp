#include "expansive/presentation.hpp"

#include <algorithm>

namespace expansive {

IdealSpec IdealSpec::of(std::vector<LaurentPoly> gens) {
  IdealSpec s;
  s.generators = std::move(gens);
  for (const auto& g : s.generators)
    for (int v : g.variables()) s.ambient_vars.insert(v);
  return s;
}

void IdealSpec::validate() const {
  if (generators.empty()) throw error("ideal: empty generator list");
  for (const auto& g : generators)
    for (int v : g.variables())
      if (!ambient_vars.count(v))
        throw error("ideal: generator variable x" + std::to_string(v) +
                    " outside ambient set");
}

ModuleSpec ModuleSpec::of(std::vector<IdealSpec> ideals) {
  ModuleSpec s;
  s.annihilators = std::move(ideals);
  for (auto& a : s.annihilators)
    for (int v : a.ambient_vars) s.ambient_vars.insert(v);
  for (auto& a : s.annihilators) a.ambient_vars = s.ambient_vars;
  return s;
}

void ModuleSpec::validate() const {
  if (annihilators.empty()) throw error("module: no annihilators");
  for (const auto& a : annihilators) {
    a.validate();
    if (a.ambient_vars != ambient_vars)
      throw error("module: annihilators must share the ambient variable set");
  }
}

std::pair<IdealSpec, std::vector<int>> prune_free_variables(const IdealSpec& ideal) {
  std::set<int> used;
  for (const auto& g : ideal.generators)
    for (int v : g.variables()) used.insert(v);
  std::vector<int> pruned;
  for (int v : ideal.ambient_vars)
    if (!used.count(v)) pruned.push_back(v);
  IdealSpec out;
  out.generators = ideal.generators;
  out.ambient_vars = used;
  return {out, pruned};
}

PresentationRecord normalize_to_lambda(
    const GroupDescription& group,
    const std::vector<std::vector<LaurentPoly>>& annihilators) {
  int ngen = group.lambda ? 0 : group.rank;
  for (const auto& ideal : annihilators)
    for (const auto& g : ideal)
      for (int v : g.variables()) ngen = std::max(ngen, v);
  ngen = std::max<int>(ngen, static_cast<int>(group.torsion.size()));
  if (ngen == 0) throw error("normalize_to_lambda: empty generator sequence");

  std::vector<LaurentPoly> torsion_gens;
  for (size_t i = 0; i < group.torsion.size(); ++i) {
    long k = group.torsion[i];
    if (k == 0) continue;
    if (k < 1) throw error("normalize_to_lambda: torsion order < 1");
    // x_i^k - 1
    LaurentPoly rel = LaurentPoly::monomial(
                          ExponentVector::unit(static_cast<int>(i + 1), static_cast<int>(k))) -
                      LaurentPoly::constant(Int(1));
    torsion_gens.push_back(rel);
  }

  std::vector<IdealSpec> ideals;
  auto bodies = annihilators.empty() ? std::vector<std::vector<LaurentPoly>>{{}} : annihilators;
  for (const auto& body : bodies) {
    std::vector<LaurentPoly> gens = body;
    gens.insert(gens.end(), torsion_gens.begin(), torsion_gens.end());
    std::erase_if(gens, [](const LaurentPoly& g) { return g.is_zero(); });
    if (gens.empty())
      throw error("normalize_to_lambda: annihilator has no nonzero generators");
    ideals.push_back(IdealSpec::of(std::move(gens)));
  }

  PresentationRecord rec;
  rec.group = group;
  for (int i = 1; i <= ngen; ++i) rec.generator_vars.push_back(i);
  rec.module = ModuleSpec::of(std::move(ideals));
  for (int i = 1; i <= ngen; ++i) rec.module.ambient_vars.insert(i);
  for (auto& a : rec.module.annihilators) a.ambient_vars = rec.module.ambient_vars;
  return rec;
}

}  // namespace expansive
