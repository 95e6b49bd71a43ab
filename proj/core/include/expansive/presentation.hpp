#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expansive/laurent.hpp"
#include "expansive/unipoly.hpp"

namespace expansive {

/// Finite generator list for an annihilator ideal, with its explicit ambient
/// variable set.
struct IdealSpec {
  std::vector<LaurentPoly> generators;
  std::set<int> ambient_vars;

  static IdealSpec of(std::vector<LaurentPoly> gens);
  void validate() const;  // ambient_vars must cover all generator supports
};

/// One annihilator ideal per module generator, over a shared ambient set.
struct ModuleSpec {
  std::vector<IdealSpec> annihilators;
  std::set<int> ambient_vars;

  static ModuleSpec of(std::vector<IdealSpec> ideals);
  void validate() const;
};

/// Drop ambient variables that occur in no generator.  Such a variable is
/// unconstrained and can be sent to 1 by any homomorphism, so verdicts are
/// unchanged; pruned indices are reported so witnesses can be extended.
std::pair<IdealSpec, std::vector<int>> prune_free_variables(const IdealSpec& ideal);

/// A parametrized family f_n of group-ring elements: a list of terms, each a
/// coefficient polynomial in the parameter n attached to an exponent pattern
/// whose variable indices may be fixed or symbolic (n + offset).
struct GeneratorFamily {
  struct Index {
    bool symbolic = false;  // var = n + offset when symbolic, else var = offset
    int offset = 0;
  };
  struct Term {
    std::vector<std::pair<Index, int>> exponents;  // (index, exponent)
    UniPoly coeff;                                 // polynomial in n
  };
  std::vector<Term> terms;

  LaurentPoly instantiate(int n) const;
};

/// [f_1, ..., f_{n_max}] with exact integer coefficients.
std::vector<LaurentPoly> family_expand(const GeneratorFamily& family, int n_max);

/// Image of f_n under the all-ones homomorphism, as a polynomial in n.
/// Identically zero iff the all-ones assignment annihilates the family.
UniPoly augmentation_poly(const GeneratorFamily& family);

/// Source group for a presentation: Z^d (rank d) or the countable direct sum
/// Lambda; per-generator torsion orders (0 = free).
struct GroupDescription {
  bool lambda = false;
  int rank = 0;  // ignored when lambda
  std::vector<long> torsion;  // per generator; entries may be omitted
};

struct PresentationRecord {
  GroupDescription group;
  std::vector<int> generator_vars;  // variable allocated per group generator
  ModuleSpec module;
};

/// Normalize a G-presentation to the Lambda picture: one variable per group
/// generator, torsion order k folded in as x^k - 1 in every annihilator.
PresentationRecord normalize_to_lambda(const GroupDescription& group,
                                       const std::vector<std::vector<LaurentPoly>>& annihilators);

}  // namespace expansive
