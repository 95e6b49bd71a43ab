#include "expansive/certificate.hpp"

#include <functional>

#include "expansive/unit_circle.hpp"
#include "torus_internal.hpp"

namespace expansive {

namespace {

bool replay_trivial(const TrivialCert& c, const IdealSpec& ideal) {
  switch (c.kind) {
    case TrivialCert::EmptyAmbient:
      return ideal.ambient_vars.empty();
    case TrivialCert::TrivialModule:
    case TrivialCert::NonzeroConstant: {
      if (c.generator_index < 0 ||
          c.generator_index >= static_cast<int>(ideal.generators.size()))
        return false;
      const auto& g = ideal.generators[static_cast<size_t>(c.generator_index)];
      return g.is_unit_monomial() || (g.is_constant() && g.constant_value() != 0);
    }
  }
  return false;
}

bool replay_sturm(const SturmTranscript& t, const IdealSpec& ideal) {
  if (ideal.ambient_vars.size() != 1) return false;
  UniPoly g = detail::univariate_content(ideal, *ideal.ambient_vars.begin());
  if (g.is_zero()) return false;
  if (g.degree() == 0) return t.total == 0 && t.input.degree() <= 0;
  auto cc = unit_circle_root_count(g);
  return cc.transcript.input == t.input && cc.count == t.total && t.total == 0;
}

bool replay_resultants(const ResultantChain& c, const IdealSpec& ideal) {
  auto es = detail::compute_eliminants(ideal, c.base_var, c.eliminated_var);
  if (!es.ok) return false;
  if (!(es.common == c.common) || es.eliminants != c.eliminants) return false;
  if (c.common.is_zero()) return false;
  if (c.common.degree() == 0) return true;
  return unit_circle_root_count(c.common).count == 0;
}

bool replay_cover(const IntervalCover& c, const IdealSpec& ideal) {
  if (c.vars.empty() || c.nodes.empty()) return false;
  if (std::set<int>(c.vars.begin(), c.vars.end()) != ideal.ambient_vars) return false;
  std::vector<std::optional<TorusGenerator>> boxed(ideal.generators.size());

  size_t pos = 0;
  std::function<bool(const DyadicBox&)> walk = [&](const DyadicBox& box) -> bool {
    if (pos >= c.nodes.size()) return false;
    const auto node = c.nodes[pos++];
    if (node.split_dim < 0) {
      if (node.excluded_by < 0 ||
          node.excluded_by >= static_cast<int>(ideal.generators.size()))
        return false;
      auto& tg = boxed[static_cast<size_t>(node.excluded_by)];
      if (!tg) {
        const auto& g = ideal.generators[static_cast<size_t>(node.excluded_by)];
        if (g.is_zero()) return false;
        tg.emplace(g, c.vars);
      }
      return tg->eval_box(box).excludes_zero();
    }
    if (node.split_dim >= static_cast<int>(c.vars.size())) return false;
    auto [first, second] = box.split(static_cast<size_t>(node.split_dim));
    return walk(first) && walk(second);
  };
  bool ok = walk(DyadicBox::root(c.vars.size()));
  return ok && pos == c.nodes.size();
}

}  // namespace

bool replay_certificate(const EmptinessCertificate& cert, const IdealSpec& ideal) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, TrivialCert>) return replay_trivial(c, ideal);
        if constexpr (std::is_same_v<T, SturmTranscript>) return replay_sturm(c, ideal);
        if constexpr (std::is_same_v<T, ResultantChain>) return replay_resultants(c, ideal);
        if constexpr (std::is_same_v<T, IntervalCover>) return replay_cover(c, ideal);
        return false;
      },
      cert);
}

const char* certificate_kind_name(const EmptinessCertificate& cert) {
  return std::visit(
      [](const auto& c) -> const char* {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, TrivialCert>) return "trivial";
        if constexpr (std::is_same_v<T, SturmTranscript>) return "sturm-transcript";
        if constexpr (std::is_same_v<T, ResultantChain>) return "resultant-chain";
        if constexpr (std::is_same_v<T, IntervalCover>) return "interval-cover";
        return "unknown";
      },
      cert);
}

}  // namespace expansive
