#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "expansive/numeric.hpp"

namespace expansive {

/// Dense univariate polynomial over the rationals.  Coefficients are stored
/// from degree 0 upward; the zero polynomial is the empty list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

  static UniPoly from_ints(std::initializer_list<long> coeffs);
  static UniPoly constant(Rat v) { return UniPoly(std::vector<Rat>{std::move(v)}); }
  /// x^k
  static UniPoly monomial(int k, Rat coeff = Rat(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](size_t i) const { return c_[i]; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& lead() const;

  Rat operator()(const Rat& x) const;
  double eval_double(double x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Divides exactly or returns quotient+remainder.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  UniPoly divexact(const UniPoly& b) const;

  /// Multiply through by the lcm of denominators and divide by integer content.
  UniPoly primitive_integer() const;
  bool has_integer_coeffs() const;
  Int coeff_abs_sum_int() const;

  /// Removes every (x - r) factor; returns multiplicity removed.
  int remove_root(const Rat& r);

  /// x^{deg} f(1/x).  Requires f nonzero with f(0) != 0.
  UniPoly reciprocal() const;

  /// Strip x^k factors; returns k.
  int strip_zero_roots();

  UniPoly squarefree_part() const;

  /// B with all complex roots inside |x| < B (Cauchy bound), as a rational.
  Rat cauchy_bound() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Endpoint roots are removed exactly before counting, so endpoints that
/// happen to be roots do not disturb the count of interior roots.
int sturm_count(const UniPoly& p, const Rat& lo, const Rat& hi);

/// Isolating intervals (lo, hi] ... pairwise disjoint, one distinct real root
/// of p each, covering all roots in (lo, hi).  p need not be squarefree.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& p, Rat lo, Rat hi);

/// Shrink an isolating interval of p below the requested width by bisection.
std::pair<Rat, Rat> refine_root(const UniPoly& p, Rat lo, Rat hi, const Rat& width);

}  // namespace expansive
