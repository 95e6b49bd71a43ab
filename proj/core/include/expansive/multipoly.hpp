#pragma once

#include <map>

#include "expansive/interval.hpp"
#include "expansive/laurent.hpp"
#include "expansive/unipoly.hpp"

namespace expansive {

/// Sparse multivariate polynomial over the rationals (nonnegative exponents).
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly constant(const Rat& c);
  static MultiPoly monomial(const ExponentVector& m, const Rat& c = Rat(1));
  static MultiPoly variable(int var) { return monomial(ExponentVector::unit(var)); }
  /// From a Laurent polynomial after its nonnegative shift.
  static MultiPoly from_laurent(const LaurentPoly& f);
  static MultiPoly from_unipoly(const UniPoly& p, int var);

  const std::map<ExponentVector, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  void add_term(const ExponentVector& m, const Rat& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

  /// Exact division; throws if the division does not come out exact.
  MultiPoly divexact(const MultiPoly& b) const;

  int degree_in(int var) const;
  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MultiPoly coeff_of(int var, int k) const;
  std::set<int> variables() const;

  /// Conversion to a dense univariate polynomial; requires support in `var` only.
  UniPoly to_unipoly(int var) const;

  std::string to_string() const;

 private:
  std::map<ExponentVector, Rat> t_;
};

/// Sylvester resultant eliminating `var`; both inputs must have positive
/// degree in `var`.  Computed by fraction-free (Bareiss) elimination.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Interval enclosure of f over a per-variable box.  Every variable of f must
/// be bound; extra bindings are ignored.
Interval interval_eval(const MultiPoly& f, const std::map<int, Interval>& box);

}  // namespace expansive
