#include "expansive/torus.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "expansive/boxeval.hpp"
#include "expansive/multipoly.hpp"
#include "torus_internal.hpp"

namespace expansive {

namespace detail {

UniPoly univariate_content(const IdealSpec& ideal, int var) {
  UniPoly g;
  for (const auto& f : ideal.generators) {
    if (f.is_zero()) continue;
    UniPoly u = MultiPoly::from_laurent(f.nonnegative_shift()).to_unipoly(var);
    u.strip_zero_roots();
    g = g.is_zero() ? u : poly_gcd(g, u);
    if (!g.is_zero() && g.degree() == 0) break;
  }
  return g;
}

MultiPoly torus_conjugate(const MultiPoly& f, int v1, int v2) {
  int d1 = f.degree_in(v1), d2 = f.degree_in(v2);
  MultiPoly out;
  for (const auto& [m, c] : f.terms()) {
    ExponentVector e;
    e.set(v1, d1 - m.exponent(v1));
    e.set(v2, d2 - m.exponent(v2));
    out.add_term(e, c);
  }
  return out;
}

EliminantSet compute_eliminants(const IdealSpec& ideal, int base_var, int elim_var) {
  EliminantSet out;
  for (const auto& f : ideal.generators) {
    if (f.is_zero()) continue;
    MultiPoly m = MultiPoly::from_laurent(f.nonnegative_shift());
    UniPoly u;
    if (m.degree_in(elim_var) == 0) {
      u = m.to_unipoly(base_var);
    } else if (m.degree_in(base_var) == 0) {
      continue;  // constrains the eliminated variable only
    } else {
      MultiPoly r = resultant(m, torus_conjugate(m, base_var, elim_var), elim_var);
      if (r.is_zero()) return out;  // generator shares a factor with its conjugate
      u = r.to_unipoly(base_var);
    }
    u.strip_zero_roots();
    if (u.is_zero()) return out;
    out.eliminants.push_back(u.primitive_integer());
  }
  if (out.eliminants.empty()) return out;
  UniPoly g;
  for (const auto& u : out.eliminants) g = g.is_zero() ? u : poly_gcd(g, u);
  out.common = g.primitive_integer();
  out.ok = true;
  return out;
}

}  // namespace detail

namespace {

constexpr long kGridPointBudget = 8000;
constexpr unsigned kSnapOrderCap = 360;  // lcm bound for snapped cyclotomic orders

std::complex<double> eval_raw(const LaurentPoly& f, const std::vector<int>& vars,
                              const std::vector<double>& turns) {
  std::complex<double> acc = 0;
  for (const auto& [m, c] : f.terms()) {
    double u = 0;
    for (size_t j = 0; j < vars.size(); ++j) u += m.exponent(vars[j]) * turns[j];
    acc += to_double(c) * std::polar(1.0, 2 * M_PI * u);
  }
  return acc;
}

double max_residual(const std::vector<LaurentPoly>& gens, const std::vector<int>& vars,
                    const std::vector<double>& turns) {
  double r = 0;
  for (const auto& g : gens) r = std::max(r, std::abs(eval_raw(g, vars, turns)));
  return r;
}

// Solve (JtJ + damp I) x = rhs in place; n is small.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, size_t n) {
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (std::abs(a[piv * n + col]) < 1e-300) return false;
    if (piv != col) {
      for (size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
      std::swap(b[col], b[piv]);
    }
    for (size_t r = col + 1; r < n; ++r) {
      double f = a[r * n + col] / a[col * n + col];
      for (size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  for (size_t i = n; i-- > 0;) {
    double s = b[i];
    for (size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * b[k];
    b[i] = s / a[i * n + i];
  }
  return true;
}

// Gauss-Newton descent on the stacked real residuals of all generators.
void newton_polish(const std::vector<LaurentPoly>& gens, const std::vector<int>& vars,
                   std::vector<double>& theta) {
  const size_t n = vars.size();
  for (int it = 0; it < 60; ++it) {
    std::vector<double> jtj(n * n, 0.0), jtf(n, 0.0);
    double res = 0;
    for (const auto& g : gens) {
      std::complex<double> val = 0;
      std::vector<std::complex<double>> grad(n, 0.0);
      for (const auto& [m, c] : g.terms()) {
        double u = 0;
        for (size_t j = 0; j < n; ++j) u += m.exponent(vars[j]) * theta[j];
        std::complex<double> t = to_double(c) * std::polar(1.0, 2 * M_PI * u);
        val += t;
        for (size_t j = 0; j < n; ++j)
          grad[j] += 2 * M_PI * m.exponent(vars[j]) * std::complex<double>(0, 1) * t;
      }
      res = std::max(res, std::abs(val));
      for (size_t r = 0; r < n; ++r) {
        jtf[r] += grad[r].real() * val.real() + grad[r].imag() * val.imag();
        for (size_t c2 = 0; c2 < n; ++c2)
          jtj[r * n + c2] += grad[r].real() * grad[c2].real() + grad[r].imag() * grad[c2].imag();
      }
    }
    if (res < 1e-14) return;
    double damp = 1e-12;
    for (size_t j = 0; j < n; ++j) damp = std::max(damp, 1e-10 * jtj[j * n + j]);
    for (size_t j = 0; j < n; ++j) jtj[j * n + j] += damp;
    if (!solve_dense(jtj, jtf, n)) return;
    double step = 0;
    for (size_t j = 0; j < n; ++j) {
      theta[j] -= jtf[j];
      theta[j] -= std::floor(theta[j]);
      step = std::max(step, std::abs(jtf[j]));
    }
    if (step < 1e-16) return;
  }
}

struct GridOutcome {
  bool found = false;
  TorusWitness witness;
};

// Exact search over tuples of roots of unity of a common order, ascending in
// the order so the lowest-order witness is reported.
GridOutcome cyclotomic_grid_search(const std::vector<LaurentPoly>& gens,
                                   const std::vector<int>& vars, unsigned order_limit) {
  GridOutcome out;
  const size_t n = vars.size();
  long spent = 0;
  for (unsigned q = 1; q <= order_limit; ++q) {
    double points = std::pow(static_cast<double>(q), static_cast<double>(n));
    if (spent + points > kGridPointBudget) break;
    std::vector<long> a(n, 0);
    while (true) {
      long g = q;
      for (long v : a) g = std::gcd(g, v);
      if (g == 1) {  // skip tuples already seen at a smaller order
        ++spent;
        std::map<int, CycValue> assign;
        for (size_t j = 0; j < n; ++j) assign[vars[j]] = CycValue::root_power(q, a[j]);
        bool all_zero = true;
        for (const auto& f : gens)
          if (!evaluate_cyclotomic(f, assign).is_zero()) {
            all_zero = false;
            break;
          }
        if (all_zero) {
          out.found = true;
          for (size_t j = 0; j < n; ++j)
            out.witness.assignments[vars[j]] = WitnessValue(CycValue::root_power(q, a[j]));
          return out;
        }
      }
      size_t j = n;
      while (j > 0 && a[j - 1] == q - 1) a[--j] = 0;
      if (j == 0) break;
      ++a[j - 1];
    }
  }
  return out;
}

TorusResult empty_with(EmptinessCertificate cert, std::string note) {
  TorusResult r;
  r.status = TorusResult::Empty;
  r.certificate = std::move(cert);
  r.note = std::move(note);
  return r;
}

}  // namespace

TorusResult torus_intersection(const IdealSpec& ideal, const EngineConfig& config) {
  ideal.validate();
  std::vector<int> vars(ideal.ambient_vars.begin(), ideal.ambient_vars.end());
  const size_t n = vars.size();

  std::vector<LaurentPoly> gens;
  std::vector<int> gen_index;  // position in ideal.generators
  for (size_t i = 0; i < ideal.generators.size(); ++i) {
    const auto& f = ideal.generators[i];
    if (f.is_zero()) continue;
    if ((f.is_constant() && f.constant_value() != 0) || f.is_unit_monomial())
      return empty_with(TrivialCert{TrivialCert::NonzeroConstant, static_cast<int>(i)},
                        "a generator is a unit of the group ring");
    gens.push_back(f);
    gen_index.push_back(static_cast<int>(i));
  }

  if (gens.empty()) {
    TorusResult r;
    r.status = TorusResult::Nonempty;
    r.witness = TorusWitness{};
    for (int v : vars) r.witness->assignments[v] = WitnessValue(CycValue::one());
    r.witness_exact = true;
    r.note = "zero ideal: the whole torus";
    return r;
  }

  if (n == 1) {
    UniPoly g = detail::univariate_content(ideal, vars[0]);
    if (g.degree() == 0) {
      SturmTranscript t;
      t.input = g;
      t.note = "generators are coprime over Q";
      return empty_with(std::move(t), "no common complex root");
    }
    auto cc = unit_circle_root_count(g);
    if (cc.count == 0)
      return empty_with(std::move(cc.transcript), "common factor has no unimodular root");
    auto root = extract_unimodular_root(g, config.cyclo_order_limit);
    TorusResult r;
    if (!root) {
      r.status = TorusResult::Unknown;
      r.note = "unimodular root counted but not isolated";
      return r;
    }
    r.status = TorusResult::Nonempty;
    r.witness = TorusWitness{};
    r.witness->assignments[vars[0]] = *root;
    r.witness_exact = true;
    if (!verify_witness(gens, *r.witness)) {
      r.status = TorusResult::Unknown;
      r.witness.reset();
      r.note = "internal: extracted root failed exact verification";
    }
    return r;
  }

  // Build the box evaluators up front; a generator that already excludes zero
  // on the whole torus settles emptiness in one leaf, so the exact grid
  // search below would be wasted work.
  std::vector<TorusGenerator> boxed;
  boxed.reserve(gens.size());
  for (const auto& f : gens) boxed.emplace_back(f, vars);
  DyadicBox root_box = DyadicBox::root(n);
  bool root_excluded = false;
  for (const auto& tg : boxed)
    if (tg.eval_box(root_box).excludes_zero()) {
      root_excluded = true;
      break;
    }

  if (n >= 1 && !root_excluded) {
    auto grid = cyclotomic_grid_search(gens, vars, config.cyclo_order_limit);
    if (grid.found) {
      TorusResult r;
      r.status = TorusResult::Nonempty;
      r.witness = std::move(grid.witness);
      r.witness_exact = true;
      r.note = "root-of-unity point";
      return r;
    }
  }

  if (n == 2 && !root_excluded) {
    for (int flip = 0; flip < 2; ++flip) {
      int base = vars[flip], elim = vars[1 - flip];
      auto es = detail::compute_eliminants(ideal, base, elim);
      if (!es.ok || es.common.is_zero()) continue;
      ResultantChain chain;
      chain.base_var = base;
      chain.eliminated_var = elim;
      chain.eliminants = es.eliminants;
      chain.common = es.common;
      if (es.common.degree() == 0) {
        chain.circle_count.input = es.common;
        chain.circle_count.note = "constant gcd of eliminants";
        return empty_with(std::move(chain), "eliminants are coprime");
      }
      auto cc = unit_circle_root_count(es.common);
      if (cc.count == 0) {
        chain.circle_count = std::move(cc.transcript);
        return empty_with(std::move(chain), "eliminant gcd has no unimodular root");
      }
      break;  // unimodular candidates exist; fall through to subdivision
    }
  }

  // Deterministic depth-first subdivision of the angle torus.
  IntervalCover cover;
  cover.vars = vars;
  bool cover_ok = true;
  long used = 0;
  std::vector<std::vector<double>> candidates;
  std::vector<DyadicBox> stack{root_box};
  while (!stack.empty()) {
    if (used >= config.box_budget) {
      cover_ok = false;
      if (candidates.size() < 64) {
        std::vector<double> mid(n);
        for (size_t j = 0; j < n; ++j)
          mid[j] = 0.5 * (stack.back().sides[j].lo() + stack.back().sides[j].hi());
        candidates.push_back(std::move(mid));
      }
      break;
    }
    DyadicBox box = std::move(stack.back());
    stack.pop_back();
    ++used;
    int excluded_by = -1;
    for (size_t j = 0; j < boxed.size(); ++j)
      if (boxed[j].eval_box(box).excludes_zero()) {
        excluded_by = gen_index[j];
        break;
      }
    if (excluded_by >= 0) {
      if (cover_ok) cover.nodes.push_back({-1, excluded_by});
      continue;
    }
    if (box.max_level() >= config.max_depth) {
      cover_ok = false;
      if (candidates.size() < 64) {
        std::vector<double> mid(n);
        for (size_t j = 0; j < n; ++j) mid[j] = 0.5 * (box.sides[j].lo() + box.sides[j].hi());
        candidates.push_back(std::move(mid));
      }
      continue;
    }
    size_t dim = box.widest();
    if (cover_ok) cover.nodes.push_back({static_cast<std::int16_t>(dim), -1});
    auto [first, second] = box.split(dim);
    stack.push_back(std::move(second));
    stack.push_back(std::move(first));
  }

  if (cover_ok) {
    TorusResult r = empty_with(std::move(cover), "exhaustive box cover");
    r.boxes_used = used;
    return r;
  }

  // The cover failed; try to certify a point in one of the undecided boxes.
  std::sort(candidates.begin(), candidates.end(),
            [&](const std::vector<double>& a, const std::vector<double>& b) {
              return max_residual(gens, vars, a) < max_residual(gens, vars, b);
            });
  if (candidates.size() > 8) candidates.resize(8);
  for (auto& theta : candidates) {
    newton_polish(gens, vars, theta);
    if (max_residual(gens, vars, theta) > 1e-10) continue;

    // Try to recognize the point as a tuple of roots of unity.
    bool snapped = true;
    std::map<int, CycValue> assign;
    unsigned lcm_q = 1;
    for (size_t j = 0; j < n && snapped; ++j) {
      Rat r = rational_approx(theta[j], config.cyclo_order_limit);
      if (std::abs(theta[j] - to_double(r)) > 1e-7 || r < 0 || r >= 1) {
        snapped = false;
        break;
      }
      unsigned q = den(r).convert_to<unsigned>();
      lcm_q = std::lcm(lcm_q, q);
      if (lcm_q > kSnapOrderCap) {
        snapped = false;
        break;
      }
      assign[vars[j]] = CycValue::root_power(q, num(r).convert_to<long>());
    }
    if (snapped) {
      bool all_zero = true;
      for (const auto& f : gens)
        if (!evaluate_cyclotomic(f, assign).is_zero()) {
          all_zero = false;
          break;
        }
      if (all_zero) {
        TorusResult r;
        r.status = TorusResult::Nonempty;
        r.witness = TorusWitness{};
        for (const auto& [v, val] : assign) r.witness->assignments[v] = WitnessValue(val);
        r.witness_exact = true;
        r.boxes_used = used;
        r.note = "root-of-unity point recovered from subdivision";
        return r;
      }
    }

    double bound = 0;
    for (const auto& tg : boxed) bound = std::max(bound, tg.eval_point(theta).mag_upper());
    if (bound < config.residual_tol) {
      TorusResult r;
      r.status = TorusResult::Nonempty;
      r.witness = TorusWitness{};
      for (size_t j = 0; j < n; ++j)
        r.witness->assignments[vars[j]] =
            WitnessValue(NumericCandidate{rat_from_double(theta[j]), rat_from_double(bound)});
      r.witness_exact = false;
      r.boxes_used = used;
      r.note = "numeric candidate with certified residual bound";
      return r;
    }
  }

  TorusResult r;
  r.status = TorusResult::Unknown;
  r.boxes_used = used;
  r.note = used >= config.box_budget ? "box budget exhausted before a cover or a certified point"
                                     : "undecided boxes at maximum depth; no point certified";
  return r;
}

}  // namespace expansive
