#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "expansive/numeric.hpp"

namespace expansive {

/// Finitely supported map variable index -> integer exponent.  Variable
/// indices are 1-based (mirroring the e(n) basis); exponents may be negative
/// and zero exponents are never stored.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::pair<int, int>> entries);
  static ExponentVector unit(int var, int exp = 1);

  int exponent(int var) const;
  void set(int var, int exp);
  bool empty() const { return e_.empty(); }
  const std::vector<std::pair<int, int>>& entries() const { return e_; }

  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-() const;
  long total_degree() const;
  long abs_degree() const;  // sum of |exponents|

  bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
  /// Graded-lexicographic order: total degree first, then exponents of
  /// x1, x2, ... in turn.
  bool operator<(const ExponentVector& o) const;

 private:
  std::vector<std::pair<int, int>> e_;  // sorted by variable index
};

/// Element of the Laurent group ring: finitely supported map from monomials
/// to nonzero integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const Int& c);
  static LaurentPoly monomial(const ExponentVector& m, const Int& c = Int(1));
  static LaurentPoly variable(int var) { return monomial(ExponentVector::unit(var)); }

  const std::map<ExponentVector, Int>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t support_size() const { return t_.size(); }
  void add_term(const ExponentVector& m, const Int& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

  LaurentPoly mul_monomial(const ExponentVector& m, const Int& c = Int(1)) const;

  std::set<int> variables() const;
  Int coefficient_sum() const;
  Int coeff_abs_sum() const;

  bool is_constant() const;
  Int constant_value() const;  // requires is_constant()
  /// True for +-x^m (a unit of the Laurent ring).
  bool is_unit_monomial() const;

  /// Shift by a monomial so that all exponents become nonnegative
  /// (per-variable minimum exponent goes to zero).  Unit multiple, so torus
  /// zero sets are unchanged.
  LaurentPoly nonnegative_shift() const;

  /// Canonical printing: graded-lex descending, explicit signs.
  std::string to_string() const;

 private:
  std::map<ExponentVector, Int> t_;
};

}  // namespace expansive
