#include "expansive/interval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace expansive {

namespace {
// Absolute padding applied to double-evaluated trig endpoints.  The argument
// is reduced mod 1 exactly before evaluation, so the double round-off is a
// few ulps; 1e-12 leaves a wide margin.
const double kTrigPad = 1e-12;

double cos_turn_d(double u) { return std::cos(2.0 * std::numbers::pi * u); }
double sin_turn_d(double u) { return std::sin(2.0 * std::numbers::pi * u); }

Rat clamp_unit(double v) {
  if (v >= 1.0) return Rat(1);
  if (v <= -1.0) return Rat(-1);
  return rat_from_double(v);
}
}  // namespace

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw error("interval: lo > hi");
}

Interval Interval::operator*(const Interval& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return Interval(std::min(std::min(a, b), std::min(c, d)),
                  std::max(std::max(a, b), std::max(c, d)));
}

Interval Interval::operator*(const Rat& s) const {
  if (s >= 0) return Interval(lo * s, hi * s);
  return Interval(hi * s, lo * s);
}

Interval ipow(const Interval& x, unsigned k) {
  if (k == 0) return Interval::point(Rat(1));
  if (k == 1) return x;
  if (k % 2 == 1 || x.lo >= 0 || x.hi <= 0) {
    Rat a = x.lo, b = x.hi;
    Rat pa(1), pb(1);
    for (unsigned i = 0; i < k; ++i) {
      pa *= a;
      pb *= b;
    }
    if (k % 2 == 0 && x.hi <= 0) return Interval(pb, pa);
    return Interval(pa, pb);
  }
  // even power across zero
  Rat m = x.mag();
  Rat pm(1);
  for (unsigned i = 0; i < k; ++i) pm *= m;
  return Interval(Rat(0), pm);
}

namespace {
// Shared implementation: enclosure of trig(2*pi*u), where maxima of the
// function sit at integer+max_off turns and minima at integer+min_off.
Interval trig_turn(const Interval& u, double (*fn)(double), const Rat& max_off,
                   const Rat& min_off) {
  if (u.width() >= 1) return Interval(Rat(-1), Rat(1));
  // Translate so that lo lands in [0,1); trig is 1-periodic in turns.
  Int shift = rat_floor(u.lo);
  Rat lo = u.lo - Rat(shift), hi = u.hi - Rat(shift);
  double flo = fn(to_double(lo)), fhi = fn(to_double(hi));
  double vlo = std::min(flo, fhi) - kTrigPad;
  double vhi = std::max(flo, fhi) + kTrigPad;
  Rat rlo = clamp_unit(vlo), rhi = clamp_unit(vhi);
  // Contained critical points force the exact extrema.
  for (int base = 0; base <= 2; ++base) {
    Rat cmax = Rat(base) + max_off, cmin = Rat(base) + min_off;
    if (lo <= cmax && cmax <= hi) rhi = Rat(1);
    if (lo <= cmin && cmin <= hi) rlo = Rat(-1);
  }
  return Interval(std::min(rlo, rhi), std::max(rlo, rhi));
}
}  // namespace

Interval icos_turn(const Interval& u) {
  return trig_turn(u, &cos_turn_d, Rat(0), Rat(1, 2));
}

Interval isin_turn(const Interval& u) {
  return trig_turn(u, &sin_turn_d, Rat(1, 4), Rat(3, 4));
}

}  // namespace expansive
