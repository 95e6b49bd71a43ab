#pragma once

#include "expansive/witness.hpp"

namespace expansive {

/// Hypercube window [-N, N]^d over an explicit variable list.
struct Window {
  int radius = 1;
  std::vector<int> vars;
  long budget = 4'000'000;  // cap on the number of lattice points

  long size() const;      // (2N+1)^d
  void validate() const;  // radius >= 1 and size within budget
};

/// K = max coefficient 1-norm over the generators and the margin
/// epsilon = 1/(10K) below which no nonzero point of the solution set may
/// stay for an expansive action.
struct ExpansivenessConstant {
  Int K;
  Rat epsilon;
};

ExpansivenessConstant expansiveness_constant(const std::vector<LaurentPoly>& generators);

/// Real values on the lattice points of a window, stored densely.
struct GridValues {
  std::vector<int> vars;
  int radius = 0;
  std::vector<double> values;  // row-major, coordinate order = vars order

  static GridValues constant(std::vector<int> vars, int radius, double v);
  long index_of(const std::vector<int>& point) const;  // point in [-N, N]^d
  double at(const std::vector<int>& point) const { return values[index_of(point)]; }
  void set(const std::vector<int>& point, double v) { values[index_of(point)] = v; }
};

struct WitnessSequence {
  GridValues grid;
  Rat delta;
  double sup_norm = 0;
  std::map<int, double> turns;
};

struct ResidualReport {
  double max_residual = 0;
  long shifts_checked = 0;
  bool exhaustive = true;
  double certified = -1;  // exact recomputation of the worst residual, when done
  std::string note;
};

/// The solution-set point x_l = delta * cos(2*pi*<l, theta>) from an exactly
/// verified torus witness.  Requires delta <= epsilon from
/// expansiveness_constant; every windowed relation then vanishes up to
/// floating-point rounding.
WitnessSequence build_witness_sequence(const std::vector<LaurentPoly>& generators,
                                       const TorusWitness& witness, const Rat& delta,
                                       const Window& window);

/// Max distance of sum_l c_l(f) * x_{l+m} from the nearest integer, over all
/// generators f and window-admissible shifts m.  Exhaustive when the shift
/// count fits the budget, else a deterministic sample (axis sweeps plus a
/// seeded draw).  The worst residual is recomputed in exact rational
/// arithmetic when it comes within 10x of the tolerance.
ResidualReport check_relations(const GridValues& values,
                               const std::vector<LaurentPoly>& generators, double tolerance,
                               long shift_budget = 200'000);

/// Relabeled values x'_l = x_{l+m}; the window shrinks by max |m_j|.
GridValues shift_orbit(const GridValues& values, const ExponentVector& m);

/// Line-oriented text export: header (vars, N, delta, turn per variable) then
/// one `l_1 ... l_d value` row per lattice point, 12 decimals.
std::string export_sequence(const WitnessSequence& seq);

}  // namespace expansive
