#include "expansive/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace expansive {

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw error("rat_from_double: non-finite value");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  Int mant = Int(static_cast<long long>(std::ldexp(m, 53)));
  exp -= 53;
  Rat r(mant);
  if (exp >= 0) {
    r *= Rat(Int(1) << exp);
  } else {
    r /= Rat(Int(1) << (-exp));
  }
  return r;
}

Rat rational_approx(double x, long max_den) {
  double v = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 1e17 || fl < -1e17) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return Rat(0);
  return Rat(Int(p1), Int(q1));
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monomial(int k, Rat coeff) {
  std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
  c.back() = std::move(coeff);
  return UniPoly(std::move(c));
}

const Rat& UniPoly::lead() const {
  if (c_.empty()) throw error("lead coefficient of zero polynomial");
  return c_.back();
}

Rat UniPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::eval_double(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v = -v;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v *= s;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(Int(i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * (Rat(1) / c_.back());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw error("polynomial division by zero");
  std::vector<Rat> r(a.c_);
  int db = b.degree();
  if (static_cast<int>(r.size()) - 1 < db) return {UniPoly(), a};
  std::vector<Rat> q(r.size() - db, Rat(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    Rat f = r[i] / b.c_.back();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::divexact(const UniPoly& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw error("divexact: nonzero remainder");
  return q;
}

UniPoly UniPoly::primitive_integer() const {
  if (c_.empty()) return *this;
  Int l(1);
  for (const auto& v : c_) l = lcm(l, denominator(v));
  Int g(0);
  std::vector<Rat> c(c_);
  for (auto& v : c) {
    v *= Rat(l);
    g = gcd(g, numerator(v));
  }
  if (g == 0) g = 1;
  for (auto& v : c) v /= Rat(g);
  return UniPoly(std::move(c));
}

bool UniPoly::has_integer_coeffs() const {
  for (const auto& v : c_)
    if (denominator(v) != 1) return false;
  return true;
}

Int UniPoly::coeff_abs_sum_int() const {
  Int s(0);
  for (const auto& v : c_) s += abs_int(numerator(v));
  return s;
}

int UniPoly::remove_root(const Rat& r) {
  int mult = 0;
  UniPoly factor({-r, Rat(1)});
  while (!is_zero() && (*this)(r) == 0) {
    *this = divexact(factor);
    ++mult;
  }
  return mult;
}

UniPoly UniPoly::reciprocal() const {
  if (c_.empty()) throw error("reciprocal of zero polynomial");
  if (c_.front() == 0) throw error("reciprocal: strip powers of x first");
  std::vector<Rat> c(c_.rbegin(), c_.rend());
  return UniPoly(std::move(c));
}

int UniPoly::strip_zero_roots() {
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
  return static_cast<int>(k);
}

UniPoly UniPoly::squarefree_part() const {
  if (degree() <= 1) return *this;
  UniPoly g = poly_gcd(*this, derivative());
  if (g.degree() <= 0) return *this;
  return divexact(g);
}

Rat UniPoly::cauchy_bound() const {
  if (c_.empty()) return Rat(1);
  Rat m(0);
  for (size_t i = 0; i + 1 < c_.size(); ++i) m = std::max(m, abs_rat(c_[i] / c_.back()));
  return Rat(1) + m;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& v = c_[static_cast<size_t>(i)];
    if (v == 0) continue;
    Rat a = abs_rat(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && i > 0;
    if (!unit) os << a;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = UniPoly::divmod(x, y);
    (void)q;
    x = y;
    y = r.is_zero() ? r : r.monic();
  }
  if (x.is_zero()) return x;
  return x.monic();
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(p);
  UniPoly d = p.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && !chain.back().is_zero()) {
    auto [q, r] = UniPoly::divmod(chain[chain.size() - 2], chain.back());
    (void)q;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

int sturm_count(const UniPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw error("sturm_count: zero polynomial");
  if (!(lo < hi)) throw error("sturm_count: empty interval");
  UniPoly q = p;
  q.remove_root(lo);
  if (q.is_zero()) throw error("sturm_count: polynomial collapsed");  // cannot happen
  q.remove_root(hi);
  if (q.is_constant()) return 0;
  auto chain = sturm_chain(q);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& p, Rat lo, Rat hi) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  UniPoly sf = p.squarefree_part();
  struct Item { Rat lo, hi; int count; };
  std::vector<Item> stack{{lo, hi, sturm_count(sf, lo, hi)}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 0) continue;
    if (it.count == 1) {
      out.emplace_back(it.lo, it.hi);
      continue;
    }
    Rat mid = (it.lo + it.hi) / 2;
    // Nudge off a root so the sub-intervals stay open-compatible.
    while (sf(mid) == 0) mid = (it.lo + mid) / 2;
    int left = sturm_count(sf, it.lo, mid);
    stack.push_back({mid, it.hi, it.count - left});
    stack.push_back({it.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::pair<Rat, Rat> refine_root(const UniPoly& p, Rat lo, Rat hi, const Rat& width) {
  UniPoly sf = p.squarefree_part();
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    if (sf(mid) == 0) {
      Rat h = std::min(width / 2, (hi - lo) / 4);
      return {mid - h, mid + h};
    }
    if (sturm_count(sf, lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace expansive
