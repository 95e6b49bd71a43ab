#pragma once

#include <optional>

#include "expansive/multipoly.hpp"
#include "expansive/presentation.hpp"
#include "expansive/unipoly.hpp"

namespace expansive::detail {

/// Univariate reduction of an ideal in one effective variable: the monic gcd
/// over Q of all generators (zero roots stripped).  Common complex zeros of
/// the ideal are exactly the roots of this gcd.
UniPoly univariate_content(const IdealSpec& ideal, int var);

/// Per-generator torus eliminants for a two-variable ideal: for a bivariate
/// generator g, Res_{elim}(g, g~) with g~ the reciprocal in both variables
/// (the conjugate of g on the torus); for a generator free of `elim_var`,
/// the generator itself.  `ok` is false when some eliminant degenerates to
/// the zero polynomial (shared factor), in which case the chain is unusable.
struct EliminantSet {
  std::vector<UniPoly> eliminants;
  UniPoly common;  // gcd of all eliminants
  bool ok = false;
};
EliminantSet compute_eliminants(const IdealSpec& ideal, int base_var, int elim_var);

/// Reciprocal of a bivariate polynomial in both variables (degree-reflect).
MultiPoly torus_conjugate(const MultiPoly& f, int v1, int v2);

}  // namespace expansive::detail
