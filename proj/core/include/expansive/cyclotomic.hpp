#pragma once

#include <complex>
#include <optional>

#include "expansive/unipoly.hpp"

namespace expansive {

/// q-th cyclotomic polynomial (integer coefficients, monic).  Cached.
const UniPoly& cyclotomic_polynomial(unsigned q);

/// An element of Z[zeta_q], stored as a representative reduced mod Phi_q.
class CycValue {
 public:
  CycValue() : q_(1) {}
  CycValue(unsigned q, UniPoly rep);

  static CycValue zero(unsigned q = 1) { return CycValue(q, UniPoly()); }
  static CycValue one(unsigned q = 1) { return CycValue(q, UniPoly::constant(Rat(1))); }
  static CycValue rational(const Rat& r, unsigned q = 1) { return CycValue(q, UniPoly::constant(r)); }
  /// zeta_q^k
  static CycValue root_power(unsigned q, long k);

  unsigned order() const { return q_; }
  const UniPoly& rep() const { return rep_; }

  /// Re-express in Z[zeta_Q]; Q must be a multiple of the current order.
  CycValue embed(unsigned Q) const;

  CycValue operator+(const CycValue& o) const;
  CycValue operator-(const CycValue& o) const;
  CycValue operator*(const CycValue& o) const;
  CycValue operator-() const;
  bool operator==(const CycValue& o) const;

  /// Complex conjugate: zeta -> zeta^{q-1}.
  CycValue conj() const;

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.degree() == 0 && rep_.coeff(0) == 1; }
  bool is_rational() const { return rep_.is_constant(); }
  std::optional<Rat> as_rational() const;

  /// Exact test |v| == 1, via v * conj(v) == 1.
  bool unit_modulus() const;

  /// Inverse of a unit-modulus value (= conjugate).
  CycValue unit_inverse() const;

  /// v^k for unit-modulus v, any integer k.
  CycValue unit_pow(long k) const;

  /// If the value is +-zeta_q^k, its angle as an exact fraction of a turn in [0,1).
  std::optional<Rat> exact_turn() const;

  std::complex<double> approx() const;

 private:
  unsigned q_;
  UniPoly rep_;
};

}  // namespace expansive
