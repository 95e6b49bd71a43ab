#pragma once

#include "expansive/numeric.hpp"

namespace expansive {

/// Closed interval with exact rational endpoints.  All operations return
/// enclosures; transcendental endpoints are padded outward before being
/// converted back to rationals.
struct Interval {
  Rat lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rat l, Rat h);
  static Interval point(const Rat& v) { return Interval(v, v); }

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  Rat mag() const { return std::max(abs_rat(lo), abs_rat(hi)); }

  Interval operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }
  Interval operator-(const Interval& o) const { return Interval(lo - o.hi, hi - o.lo); }
  Interval operator-() const { return Interval(-hi, -lo); }
  Interval operator*(const Interval& o) const;
  Interval operator*(const Rat& s) const;
};

/// [x]^k with the even-power tightening (result >= 0).
Interval ipow(const Interval& x, unsigned k);

/// Enclosure of cos(2*pi*u) for u ranging over the interval (u in turns).
Interval icos_turn(const Interval& u);
/// Enclosure of sin(2*pi*u).
Interval isin_turn(const Interval& u);

}  // namespace expansive
