#include "expansive/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace expansive {

double AlgebraicPoint::turn() const {
  auto iv = refine_root(real_poly, w_lo, w_hi, Rat(Int(1), Int(1) << 48));
  double w = to_double((iv.first + iv.second) / 2);
  // One Newton polish on the squarefree part sharpens the double value.
  UniPoly sf = real_poly.squarefree_part();
  double d = sf.derivative().eval_double(w);
  if (std::abs(d) > 1e-12) w -= sf.eval_double(w) / d;
  w = std::clamp(w, -2.0, 2.0);
  double t = std::acos(w / 2.0) / (2.0 * std::numbers::pi);
  return imag_sign >= 0 ? t : 1.0 - t;
}

bool TorusWitness::is_exact() const {
  for (const auto& [v, val] : assignments) {
    (void)v;
    if (std::holds_alternative<NumericCandidate>(val)) return false;
  }
  return true;
}

double TorusWitness::turn_of(int var) const {
  auto it = assignments.find(var);
  if (it == assignments.end()) return 0.0;
  if (const auto* c = std::get_if<CycValue>(&it->second)) {
    if (auto t = c->exact_turn()) return to_double(*t);
    return std::arg(c->approx()) / (2.0 * std::numbers::pi);
  }
  if (const auto* a = std::get_if<AlgebraicPoint>(&it->second)) return a->turn();
  return to_double(std::get<NumericCandidate>(it->second).turn);
}

CycValue evaluate_cyclotomic(const LaurentPoly& f, const std::map<int, CycValue>& assignment) {
  unsigned Q = 1;
  for (const auto& [v, val] : assignment) {
    (void)v;
    Q = static_cast<unsigned>(std::lcm(Q, val.order()));
  }
  CycValue acc = CycValue::zero(Q);
  for (const auto& [m, c] : f.terms()) {
    CycValue term = CycValue::rational(Rat(c), Q);
    for (const auto& [v, e] : m.entries()) {
      auto it = assignment.find(v);
      CycValue base = it == assignment.end() ? CycValue::one(Q) : it->second.embed(Q);
      term = term * base.unit_pow(e);
    }
    acc = acc + term;
  }
  return acc;
}

namespace {

// Evaluate a univariate restriction of `gen` at an AlgebraicPoint: all other
// variables must carry rational values.  Returns true iff the value is
// exactly zero at the isolated root.
bool verify_algebraic(const LaurentPoly& gen, int var, const AlgebraicPoint& pt,
                      const std::map<int, Rat>& rationals) {
  // Collapse to a univariate Laurent polynomial in `var`.
  std::map<int, Rat> coeff_by_exp;
  int min_exp = 0;
  for (const auto& [m, c] : gen.terms()) {
    Rat coeff(c);
    int e = 0;
    for (const auto& [v, x] : m.entries()) {
      if (v == var) {
        e = x;
        continue;
      }
      auto it = rationals.find(v);
      Rat val = it == rationals.end() ? Rat(1) : it->second;
      if (val == 0) throw error("witness value 0 is not unimodular");
      // val^x
      Rat p(1);
      for (int i = 0; i < std::abs(x); ++i) p *= val;
      coeff *= (x >= 0) ? p : Rat(1) / p;
    }
    coeff_by_exp[e] += coeff;
    min_exp = std::min(min_exp, e);
  }
  // Multiply by z^{-min_exp}; z != 0 on the unit circle.
  std::vector<Rat> dense;
  for (const auto& [e, c] : coeff_by_exp) {
    size_t idx = static_cast<size_t>(e - min_exp);
    if (dense.size() <= idx) dense.resize(idx + 1, Rat(0));
    dense[idx] = c;
  }
  UniPoly g(std::move(dense));
  if (g.is_zero()) return true;

  // Horner fold of g(z) mod z^2 - w z + 1: maintain the value as A(w) z + B(w),
  // using z * (A z + B) = (A w + B) z - A.
  UniPoly A, B;
  for (int i = g.degree(); i >= 0; --i) {
    UniPoly nA = A * UniPoly({Rat(0), Rat(1)}) + B;
    UniPoly nB = -A + UniPoly::constant(g.coeff(static_cast<size_t>(i)));
    A = nA;
    B = nB;
  }
  if (A.is_zero() && B.is_zero()) return true;
  UniPoly common = poly_gcd(poly_gcd(A, B), pt.real_poly.squarefree_part());
  if (common.degree() <= 0) return false;
  return sturm_count(common, pt.w_lo, pt.w_hi) >= 1;
}

}  // namespace

bool verify_witness(const std::vector<LaurentPoly>& generators, const TorusWitness& witness) {
  int algebraic_var = -1;
  const AlgebraicPoint* algebraic_pt = nullptr;
  std::map<int, CycValue> cyc;
  std::map<int, Rat> rationals;
  bool has_nonrational_cyc = false;

  for (const auto& [v, val] : witness.assignments) {
    if (std::holds_alternative<NumericCandidate>(val))
      throw error("exact verification unavailable");
    if (const auto* a = std::get_if<AlgebraicPoint>(&val)) {
      if (algebraic_pt) throw error("incomparable witness kinds");
      algebraic_var = v;
      algebraic_pt = a;
      continue;
    }
    const auto& c = std::get<CycValue>(val);
    if (!c.unit_modulus()) throw error("witness value does not have modulus 1");
    cyc.emplace(v, c);
    if (auto r = c.as_rational())
      rationals.emplace(v, *r);
    else
      has_nonrational_cyc = true;
  }

  if (algebraic_pt) {
    if (has_nonrational_cyc) throw error("incomparable witness kinds");
    for (const auto& g : generators)
      if (!verify_algebraic(g, algebraic_var, *algebraic_pt, rationals)) return false;
    return true;
  }

  for (const auto& g : generators)
    if (!evaluate_cyclotomic(g, cyc).is_zero()) return false;
  return true;
}

bool verify_witness(const GeneratorFamily& family, const TorusWitness& witness) {
  for (const auto& [v, val] : witness.assignments) {
    (void)v;
    if (std::holds_alternative<NumericCandidate>(val))
      throw error("exact verification unavailable");
    const auto* c = std::get_if<CycValue>(&val);
    if (!c || !c->is_one())
      throw error("family verification supports all-ones witnesses only");
  }
  return augmentation_poly(family).is_zero();
}

}  // namespace expansive
