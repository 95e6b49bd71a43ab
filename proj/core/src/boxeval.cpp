#include "expansive/boxeval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace expansive {

namespace {
const double kPadPerTerm = 1e-12;

struct DInterval {
  double lo, hi;
};

double cos_turn(double u) { return std::cos(2.0 * std::numbers::pi * u); }
double sin_turn(double u) { return std::sin(2.0 * std::numbers::pi * u); }

// Enclosure of cos(2*pi*u) over u in [lo, hi] (turns); padding applied by caller.
DInterval cos_range(double lo, double hi) {
  if (hi - lo >= 1.0) return {-1.0, 1.0};
  double s = std::floor(lo);
  lo -= s;
  hi -= s;
  double a = cos_turn(lo), b = cos_turn(hi);
  DInterval r{std::min(a, b), std::max(a, b)};
  for (int k = 0; k <= 2; ++k) {
    double cmax = k, cmin = k + 0.5;
    if (lo <= cmax && cmax <= hi) r.hi = 1.0;
    if (lo <= cmin && cmin <= hi) r.lo = -1.0;
  }
  return r;
}

DInterval sin_range(double lo, double hi) {
  if (hi - lo >= 1.0) return {-1.0, 1.0};
  double s = std::floor(lo);
  lo -= s;
  hi -= s;
  double a = sin_turn(lo), b = sin_turn(hi);
  DInterval r{std::min(a, b), std::max(a, b)};
  for (int k = 0; k <= 2; ++k) {
    double cmax = k + 0.25, cmin = k + 0.75;
    if (lo <= cmax && cmax <= hi) r.hi = 1.0;
    if (lo <= cmin && cmin <= hi) r.lo = -1.0;
  }
  return r;
}
}  // namespace

size_t DyadicBox::widest() const {
  size_t best = 0;
  for (size_t i = 1; i < sides.size(); ++i)
    if (sides[i].level < sides[best].level) best = i;
  return best;
}

std::pair<DyadicBox, DyadicBox> DyadicBox::split(size_t dim) const {
  DyadicBox a = *this, b = *this;
  a.sides[dim].level++;
  a.sides[dim].num *= 2;
  b.sides[dim].level++;
  b.sides[dim].num = b.sides[dim].num * 2 + 1;
  return {a, b};
}

int DyadicBox::max_level() const {
  int m = 0;
  for (const auto& s : sides) m = std::max(m, s.level);
  return m;
}

double Enclosure::mag_upper() const {
  double re = std::max(std::abs(re_lo), std::abs(re_hi));
  double im = std::max(std::abs(im_lo), std::abs(im_hi));
  return std::hypot(re, im);
}

double Enclosure::radius() const {
  return std::max(re_hi - re_lo, im_hi - im_lo) / 2.0;
}

TorusGenerator::TorusGenerator(const LaurentPoly& f, const std::vector<int>& vars)
    : source_(f) {
  if (f.is_zero()) throw error("torus generator must be nonzero");
  // Normalize by the dominant monomial: divide by x^m where m carries the
  // largest |coefficient| (ties broken by term order).
  const ExponentVector* dom = nullptr;
  Int best(-1);
  for (const auto& [m, c] : f.terms()) {
    Int a = abs_int(c);
    if (a > best) {
      best = a;
      dom = &m;
    }
  }
  LaurentPoly g = f.mul_monomial(-*dom);
  for (const auto& [m, c] : g.terms()) {
    Term t;
    t.exps.resize(vars.size(), 0);
    for (const auto& [v, x] : m.entries()) {
      auto it = std::find(vars.begin(), vars.end(), v);
      if (it == vars.end()) throw error("generator variable missing from box");
      t.exps[static_cast<size_t>(it - vars.begin())] = x;
    }
    t.coeff = to_double(c);
    abs_sum_ += std::abs(t.coeff);
    terms_.push_back(std::move(t));
  }
  pad_ = kPadPerTerm * (static_cast<double>(terms_.size()) + 1.0) *
         std::max(1.0, abs_sum_);
}

Enclosure TorusGenerator::eval_box(const DyadicBox& box) const {
  // Common denominator 2^L for the exponent-weighted angle sums.
  int L = box.max_level();
  double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
  for (const auto& t : terms_) {
    // u = <exps, theta>: endpoints are exact dyadics with denominator 2^L.
    __int128 ulo = 0, uhi = 0;
    for (size_t i = 0; i < t.exps.size(); ++i) {
      int e = t.exps[i];
      if (e == 0) continue;
      const auto& s = box.sides[i];
      __int128 a = (__int128)s.num << (L - s.level);
      __int128 b = (__int128)(s.num + 1) << (L - s.level);
      if (e > 0) {
        ulo += a * e;
        uhi += b * e;
      } else {
        ulo += b * e;
        uhi += a * e;
      }
    }
    double scale = std::ldexp(1.0, -L);
    double dlo = static_cast<double>((long long)ulo) * scale;
    double dhi = static_cast<double>((long long)uhi) * scale;
    // Widths beyond one turn: long long truncation of __int128 is only a
    // concern past 2^63, unreachable with parser-bounded exponents; values
    // are reduced through floor() inside the range functions.
    DInterval c = cos_range(dlo, dhi), s = sin_range(dlo, dhi);
    if (t.coeff >= 0) {
      re_lo += t.coeff * c.lo;
      re_hi += t.coeff * c.hi;
      im_lo += t.coeff * s.lo;
      im_hi += t.coeff * s.hi;
    } else {
      re_lo += t.coeff * c.hi;
      re_hi += t.coeff * c.lo;
      im_lo += t.coeff * s.hi;
      im_hi += t.coeff * s.lo;
    }
  }
  return Enclosure{re_lo - pad_, re_hi + pad_, im_lo - pad_, im_hi + pad_};
}

Enclosure TorusGenerator::eval_point(const std::vector<double>& turns) const {
  double re = 0, im = 0;
  for (const auto& t : terms_) {
    double u = 0;
    for (size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i] != 0) u += t.exps[i] * turns[i];
    u -= std::floor(u);
    re += t.coeff * cos_turn(u);
    im += t.coeff * sin_turn(u);
  }
  return Enclosure{re - pad_, re + pad_, im - pad_, im + pad_};
}

}  // namespace expansive
