#pragma once

#include "expansive/harness.hpp"
#include "expansive/valuation.hpp"

namespace expansive {

enum class ProblemKind { Module, Cyclic, LinearUnits, AlgebraicUnit, WitnessCheck, Simulate };

const char* problem_kind_name(ProblemKind k);

/// A parsed problem file.  Sections: [problem] with `kind` and kind-specific
/// keys, repeated [annihilator] sections for modules, [family], [witness],
/// [simulate].  Lists are bracketed, strings double-quoted, `#` starts a
/// comment.
struct ProblemFile {
  ProblemKind kind = ProblemKind::Cyclic;
  std::vector<IdealSpec> annihilators;
  std::set<int> declared_vars;  // explicit ambient variables beyond supports
  std::optional<GeneratorFamily> family;
  int family_expand = 0;  // instantiate f_1..f_expand when a family is given
  std::optional<TorusWitness> witness;
  bool all_ones = false;  // [witness] used `all = "1"`
  std::optional<LinearUnitsSpec> linear_units;
  std::optional<AlgebraicUnitSpec> algebraic_unit;
  int window = 50;
  std::optional<Rat> delta;

  ModuleSpec module() const;  // annihilators over the union ambient set
};

ProblemFile parse_problem(const std::string& text);

/// Polynomial grammar: term (('+'|'-') term)*, term = [integer] ('*'? var
/// ('^' signed-integer)?)*, var = xN or e(N).  Errors carry line:column.
LaurentPoly parse_polynomial(const std::string& text);

/// Family grammar: the polynomial grammar extended with the parameter n in
/// coefficients (parenthesized integer polynomials) and symbolic indices
/// e(n+k).
GeneratorFamily parse_family(const std::string& text);

/// Witness values: "1", "-1", "zeta(q)^k", "turn(p/q)" (exact), "angle(x)"
/// (numeric).
WitnessValue parse_witness_value(const std::string& text);

/// "p/q", integer, or decimal literal.
Rat parse_rational(const std::string& text);

}  // namespace expansive
