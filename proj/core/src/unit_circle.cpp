#include "expansive/unit_circle.hpp"

namespace expansive {

namespace {

// h(w) with g(x) = x^k * h(x + 1/x) for a monic self-reciprocal g of degree
// 2k.  Uses the recurrence p_0 = 2, p_1 = w, p_{j+1} = w p_j - p_{j-1} for
// x^j + x^{-j}.
UniPoly half_transform(const UniPoly& g) {
  int deg = g.degree();
  if (deg % 2 != 0) throw error("half_transform: odd degree");
  int k = deg / 2;
  for (int j = 0; j <= deg; ++j)
    if (g.coeff(static_cast<size_t>(j)) != g.coeff(static_cast<size_t>(deg - j)))
      throw error("half_transform: polynomial is not self-reciprocal");
  UniPoly w({Rat(0), Rat(1)});
  UniPoly p_prev = UniPoly::constant(Rat(2));  // p_0
  UniPoly p_cur = w;                           // p_1
  UniPoly h = UniPoly::constant(g.coeff(static_cast<size_t>(k)));
  for (int j = 1; j <= k; ++j) {
    h = h + p_cur * g.coeff(static_cast<size_t>(k + j));
    UniPoly next = w * p_cur - p_prev;
    p_prev = p_cur;
    p_cur = next;
  }
  return h;
}

}  // namespace

UnitCircleCount unit_circle_root_count(const UniPoly& f) {
  if (f.is_zero()) throw error("unit_circle_root_count: zero polynomial");
  UniPoly p = f;
  p.strip_zero_roots();
  UnitCircleCount out;
  out.transcript.input = p;
  if (p.degree() == 0) {
    out.transcript.note = "constant after stripping monomial factors";
    return out;
  }
  out.transcript.roots_at_one = p(Rat(1)) == 0 ? 1 : 0;
  out.transcript.roots_at_minus_one = p(Rat(-1)) == 0 ? 1 : 0;

  UniPoly g = poly_gcd(p, p.reciprocal());
  g.remove_root(Rat(1));
  g.remove_root(Rat(-1));
  out.transcript.self_inversive = g;
  if (g.degree() >= 2) {
    UniPoly h = half_transform(g);
    out.transcript.transform = h;
    out.transcript.interior_count = sturm_count(h.squarefree_part(), Rat(-2), Rat(2));
  }
  out.count = 2 * out.transcript.interior_count + out.transcript.roots_at_one +
              out.transcript.roots_at_minus_one;
  out.transcript.total = out.count;
  return out;
}

std::optional<WitnessValue> extract_unimodular_root(const UniPoly& f, unsigned cyclo_limit) {
  UniPoly p = f;
  p.strip_zero_roots();
  if (p.is_zero() || p.degree() == 0) return std::nullopt;
  if (p(Rat(1)) == 0) return WitnessValue(CycValue::one());
  if (p(Rat(-1)) == 0) return WitnessValue(CycValue::rational(Rat(-1)));

  for (unsigned q = 3; q <= cyclo_limit; ++q) {
    const UniPoly& phi = cyclotomic_polynomial(q);
    if (phi.degree() > p.degree()) continue;
    if (UniPoly::divmod(p, phi).second.is_zero())
      return WitnessValue(CycValue::root_power(q, 1));
  }

  UniPoly g = poly_gcd(p, p.reciprocal());
  g.remove_root(Rat(1));
  g.remove_root(Rat(-1));
  if (g.degree() < 2) return std::nullopt;
  UniPoly h = half_transform(g).squarefree_part();
  auto roots = isolate_real_roots(h, Rat(-2), Rat(2));
  if (roots.empty()) return std::nullopt;
  AlgebraicPoint pt;
  pt.real_poly = h;
  pt.w_lo = roots.front().first;
  pt.w_hi = roots.front().second;
  pt.imag_sign = 1;
  return WitnessValue(std::move(pt));
}

}  // namespace expansive
