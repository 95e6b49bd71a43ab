#pragma once

#include <cstdint>
#include <vector>

#include "expansive/laurent.hpp"

namespace expansive {

/// Dyadic sub-box of the angle torus [0,1)^n (coordinates in turns).  Each
/// coordinate interval is [num, num+1] / 2^level, so boxes produced by
/// bisection are represented exactly.
struct DyadicBox {
  struct Side {
    std::int64_t num = 0;
    int level = 0;
    double lo() const { return std::ldexp(static_cast<double>(num), -level); }
    double hi() const { return std::ldexp(static_cast<double>(num + 1), -level); }
    double width() const { return std::ldexp(1.0, -level); }
  };
  std::vector<Side> sides;

  static DyadicBox root(size_t dims) { return DyadicBox{std::vector<Side>(dims)}; }
  /// Index of the widest side (lowest index on ties).
  size_t widest() const;
  std::pair<DyadicBox, DyadicBox> split(size_t dim) const;
  int max_level() const;
};

/// Rectangular enclosure of a complex value, with the evaluation padding
/// already applied.
struct Enclosure {
  double re_lo, re_hi, im_lo, im_hi;
  bool excludes_zero() const { return re_lo > 0 || re_hi < 0 || im_lo > 0 || im_hi < 0; }
  /// Upper bound for |value| over the enclosure.
  double mag_upper() const;
  /// Upper bound for max(|Re|, |Im|) radius around the midpoint.
  double radius() const;
};

/// A Laurent generator prepared for evaluation on the unit torus.  The
/// generator is normalized by its dominant monomial (a unit multiple, same
/// torus zero set), which lets coefficient-dominated generators be excluded
/// on large boxes.
class TorusGenerator {
 public:
  TorusGenerator(const LaurentPoly& f, const std::vector<int>& vars);

  /// Enclosure of f over the box (angles in turns per variable, aligned with
  /// the `vars` ordering given at construction).
  Enclosure eval_box(const DyadicBox& box) const;
  /// Enclosure at a single point, for certified residual bounds.
  Enclosure eval_point(const std::vector<double>& turns) const;

  double coeff_abs_sum() const { return abs_sum_; }
  size_t term_count() const { return terms_.size(); }
  const LaurentPoly& source() const { return source_; }

 private:
  struct Term {
    std::vector<int> exps;  // aligned with vars
    double coeff;
  };
  std::vector<Term> terms_;
  double abs_sum_ = 0;
  double pad_ = 0;
  LaurentPoly source_;
};

}  // namespace expansive
