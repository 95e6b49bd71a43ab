#include "expansive/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace expansive {

namespace {

// Reduce into (-1/2, 1/2].
double wrap_half(double v) {
  double r = v - std::nearbyint(v);
  if (r <= -0.5) r += 1.0;
  return r;
}

// Iterate a box [lo_j, hi_j] in odometer order (last coordinate fastest).
template <class F>
void for_each_point(const std::vector<long>& lo, const std::vector<long>& hi, F&& f) {
  std::vector<long> cur(lo);
  while (true) {
    f(cur);
    size_t j = cur.size();
    while (j > 0 && cur[j - 1] == hi[j - 1]) {
      --j;
      cur[j] = lo[j];
    }
    if (j == 0) return;
    ++cur[j - 1];
  }
}

}  // namespace

long Window::size() const {
  double est = std::pow(2.0 * radius + 1, static_cast<double>(vars.size()));
  if (est > 4e18) throw error("window size overflows");
  long s = 1;
  for (size_t j = 0; j < vars.size(); ++j) s *= 2L * radius + 1;
  return s;
}

void Window::validate() const {
  if (radius < 1) throw error("window radius must be at least 1");
  if (vars.empty()) throw error("window has no variables");
  if (size() > budget) throw error("window exceeds the lattice-point budget");
}

ExpansivenessConstant expansiveness_constant(const std::vector<LaurentPoly>& generators) {
  if (generators.empty()) throw error("expansiveness_constant: empty generator list");
  Int k = 0;
  for (const auto& f : generators) k = std::max(k, f.coeff_abs_sum());
  if (k == 0) throw error("expansiveness_constant: all generators are zero");
  return {k, Rat(1) / (10 * Rat(k))};
}

GridValues GridValues::constant(std::vector<int> vars, int radius, double v) {
  GridValues g;
  g.vars = std::move(vars);
  g.radius = radius;
  long s = 1;
  for (size_t j = 0; j < g.vars.size(); ++j) s *= 2L * radius + 1;
  g.values.assign(static_cast<size_t>(s), v);
  return g;
}

long GridValues::index_of(const std::vector<int>& point) const {
  if (point.size() != vars.size()) throw error("grid point has wrong dimension");
  long idx = 0;
  for (size_t j = 0; j < point.size(); ++j) {
    if (point[j] < -radius || point[j] > radius) throw error("grid point outside window");
    idx = idx * (2L * radius + 1) + (point[j] + radius);
  }
  return idx;
}

WitnessSequence build_witness_sequence(const std::vector<LaurentPoly>& generators,
                                       const TorusWitness& witness, const Rat& delta,
                                       const Window& window) {
  window.validate();
  for (const auto& f : generators)
    for (int v : f.variables())
      if (std::find(window.vars.begin(), window.vars.end(), v) == window.vars.end())
        throw error("generator uses a variable outside the window");
  if (!verify_witness(generators, witness))
    throw error("build_witness_sequence: witness fails verification");
  auto ec = expansiveness_constant(generators);
  if (delta > ec.epsilon) throw error("build_witness_sequence: delta exceeds 1/(10K)");

  WitnessSequence seq;
  seq.delta = delta;
  seq.grid = GridValues::constant(window.vars, window.radius, 0.0);
  for (int v : window.vars) seq.turns[v] = witness.turn_of(v);

  const size_t d = window.vars.size();
  std::vector<long> lo(d, -window.radius), hi(d, window.radius);
  double del = to_double(delta);
  size_t idx = 0;
  for_each_point(lo, hi, [&](const std::vector<long>& l) {
    double u = 0;
    for (size_t j = 0; j < d; ++j) u += l[j] * seq.turns[window.vars[j]];
    double x = wrap_half(del * std::cos(2 * M_PI * u));
    seq.grid.values[idx++] = x;
    seq.sup_norm = std::max(seq.sup_norm, std::abs(x));
  });
  return seq;
}

ResidualReport check_relations(const GridValues& values,
                               const std::vector<LaurentPoly>& generators, double tolerance,
                               long shift_budget) {
  ResidualReport rep;
  const size_t d = values.vars.size();
  const int N = values.radius;

  const LaurentPoly* worst_gen = nullptr;
  std::vector<long> worst_shift;

  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    for (int v : f.variables())
      if (std::find(values.vars.begin(), values.vars.end(), v) == values.vars.end())
        throw error("generator uses a variable outside the window: " + f.to_string());
    std::vector<long> lo(d), hi(d);
    for (size_t j = 0; j < d; ++j) {
      int e_lo = 0, e_hi = 0;
      for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(values.vars[j]);
        e_lo = std::min(e_lo, e);
        e_hi = std::max(e_hi, e);
      }
      lo[j] = -N - e_lo;
      hi[j] = N - e_hi;
      if (lo[j] > hi[j]) throw error("window too small for generator " + f.to_string());
    }

    auto eval_shift = [&](const std::vector<long>& m) {
      double r = 0;
      std::vector<int> p(d);
      for (const auto& [mono, c] : f.terms()) {
        for (size_t j = 0; j < d; ++j)
          p[j] = static_cast<int>(m[j]) + mono.exponent(values.vars[j]);
        r += to_double(c) * values.at(p);
      }
      double dist = std::abs(r - std::nearbyint(r));
      ++rep.shifts_checked;
      if (dist > rep.max_residual) {
        rep.max_residual = dist;
        worst_gen = &f;
        worst_shift = m;
      }
    };

    double count = 1;
    for (size_t j = 0; j < d; ++j) count *= static_cast<double>(hi[j] - lo[j] + 1);
    if (count <= static_cast<double>(shift_budget)) {
      for_each_point(lo, hi, eval_shift);
    } else {
      rep.exhaustive = false;
      std::vector<long> base(d);
      for (size_t j = 0; j < d; ++j) base[j] = std::clamp(0L, lo[j], hi[j]);
      eval_shift(base);
      long spent = 1;
      for (size_t j = 0; j < d && spent < shift_budget; ++j) {
        auto m = base;
        for (long v = lo[j]; v <= hi[j] && spent < shift_budget; ++v) {
          m[j] = v;
          eval_shift(m);
          ++spent;
        }
      }
      std::mt19937 rng(12345);
      while (spent < shift_budget) {
        std::vector<long> m(d);
        for (size_t j = 0; j < d; ++j)
          m[j] = lo[j] + static_cast<long>(rng() % static_cast<unsigned long>(hi[j] - lo[j] + 1));
        eval_shift(m);
        ++spent;
      }
    }
  }

  if (worst_gen && rep.max_residual <= 10 * tolerance) {
    // Recompute the worst relation in exact rational arithmetic; the stored
    // doubles are exact dyadic rationals, so this removes all rounding.
    Rat r = 0;
    std::vector<int> p(d);
    for (const auto& [mono, c] : worst_gen->terms()) {
      for (size_t j = 0; j < d; ++j)
        p[j] = static_cast<int>(worst_shift[j]) + mono.exponent(values.vars[j]);
      r += Rat(c) * rat_from_double(values.at(p));
    }
    Rat frac = r - Rat(rat_floor(r + Rat(1, 2)));
    rep.certified = std::abs(to_double(frac));
    rep.note = "worst residual recomputed exactly";
  } else {
    rep.note = rep.exhaustive ? "all admissible shifts checked" : "sampled shift set";
  }
  return rep;
}

GridValues shift_orbit(const GridValues& values, const ExponentVector& m) {
  int shrink = 0;
  for (const auto& [v, e] : m.entries()) {
    if (std::find(values.vars.begin(), values.vars.end(), v) == values.vars.end())
      throw error("shift uses a variable outside the window");
    shrink = std::max(shrink, std::abs(e));
  }
  if (values.radius - shrink < 0) throw error("shift exceeds window margins");

  GridValues out = GridValues::constant(values.vars, values.radius - shrink, 0.0);
  const size_t d = values.vars.size();
  std::vector<long> lo(d, -out.radius), hi(d, out.radius);
  size_t idx = 0;
  for_each_point(lo, hi, [&](const std::vector<long>& l) {
    std::vector<int> p(d);
    for (size_t j = 0; j < d; ++j)
      p[j] = static_cast<int>(l[j]) + m.exponent(values.vars[j]);
    out.values[idx++] = values.at(p);
  });
  return out;
}

std::string export_sequence(const WitnessSequence& seq) {
  std::string out = "vars =";
  for (int v : seq.grid.vars) out += " x" + std::to_string(v);
  out += "\nN = " + std::to_string(seq.grid.radius);
  out += "\ndelta = " + std::to_string(to_double(seq.delta)) + "\n";
  char buf[64];
  for (int v : seq.grid.vars) {
    std::snprintf(buf, sizeof buf, "turn x%d = %.12f\n", v, seq.turns.at(v));
    out += buf;
  }
  const size_t d = seq.grid.vars.size();
  std::vector<long> lo(d, -seq.grid.radius), hi(d, seq.grid.radius);
  size_t idx = 0;
  for_each_point(lo, hi, [&](const std::vector<long>& l) {
    std::string row;
    for (long c : l) row += std::to_string(c) + " ";
    std::snprintf(buf, sizeof buf, "%.12f\n", seq.grid.values[idx++]);
    out += row + buf;
  });
  return out;
}

}  // namespace expansive
