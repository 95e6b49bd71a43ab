#include "expansive/multipoly.hpp"

#include <sstream>

namespace expansive {

MultiPoly MultiPoly::constant(const Rat& c) {
  MultiPoly p;
  p.add_term(ExponentVector(), c);
  return p;
}

MultiPoly MultiPoly::monomial(const ExponentVector& m, const Rat& c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::from_laurent(const LaurentPoly& f) {
  MultiPoly p;
  LaurentPoly shifted = f.nonnegative_shift();
  for (const auto& [m, c] : shifted.terms()) p.add_term(m, Rat(c));
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, int var) {
  MultiPoly r;
  for (int i = 0; i <= p.degree(); ++i)
    r.add_term(i == 0 ? ExponentVector() : ExponentVector::unit(var, i),
               p.coeff(static_cast<size_t>(i)));
  return r;
}

bool MultiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

void MultiPoly::add_term(const ExponentVector& m, const Rat& c) {
  if (c == 0) return;
  for (const auto& [v, x] : m.entries()) {
    (void)v;
    if (x < 0) throw error("MultiPoly exponents must be nonnegative");
  }
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

namespace {
bool monomial_divides(const ExponentVector& d, const ExponentVector& m) {
  for (const auto& [v, x] : d.entries())
    if (m.exponent(v) < x) return false;
  return true;
}

ExponentVector monomial_quotient(const ExponentVector& m, const ExponentVector& d) {
  ExponentVector q = m;
  for (const auto& [v, x] : d.entries()) q.set(v, q.exponent(v) - x);
  return q;
}
}  // namespace

MultiPoly MultiPoly::divexact(const MultiPoly& b) const {
  if (b.is_zero()) throw error("MultiPoly division by zero");
  MultiPoly r = *this, q;
  const auto& ltb = *b.t_.rbegin();  // graded-lex leading term
  while (!r.is_zero()) {
    const auto& ltr = *r.t_.rbegin();
    if (!monomial_divides(ltb.first, ltr.first))
      throw error("MultiPoly divexact: not divisible");
    MultiPoly t = MultiPoly::monomial(monomial_quotient(ltr.first, ltb.first),
                                      ltr.second / ltb.second);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : t_) {
    (void)c;
    d = std::max(d, m.exponent(var));
  }
  return t_.empty() ? -1 : std::max(d, 0);
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly r;
  for (const auto& [m, c] : t_) {
    if (m.exponent(var) != k) continue;
    ExponentVector rest = m;
    rest.set(var, 0);
    r.add_term(rest, c);
  }
  return r;
}

std::set<int> MultiPoly::variables() const {
  std::set<int> vars;
  for (const auto& [m, c] : t_) {
    (void)c;
    for (const auto& [v, x] : m.entries()) {
      (void)x;
      vars.insert(v);
    }
  }
  return vars;
}

UniPoly MultiPoly::to_unipoly(int var) const {
  std::vector<Rat> c(static_cast<size_t>(std::max(degree_in(var), 0)) + 1, Rat(0));
  for (const auto& [m, co] : t_) {
    for (const auto& [v, x] : m.entries()) {
      (void)x;
      if (v != var) throw error("to_unipoly: polynomial is not univariate");
    }
    c[static_cast<size_t>(m.exponent(var))] = co;
  }
  return UniPoly(std::move(c));
}

std::string MultiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = abs_rat(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && !m.empty();
    if (!unit) os << a;
    bool sep = !unit;
    for (const auto& [v, x] : m.entries()) {
      if (sep) os << "*";
      os << "x" << v;
      if (x != 1) os << "^" << x;
      sep = true;
    }
  }
  return os.str();
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  int m = f.degree_in(var), n = g.degree_in(var);
  if (f.is_zero() || g.is_zero() || m <= 0 || n <= 0)
    throw error("resultant: inputs must have positive degree in the eliminated variable");
  size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<MultiPoly>> M(size, std::vector<MultiPoly>(size));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k)
      M[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = f.coeff_of(var, m - k);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      M[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] = g.coeff_of(var, n - k);

  // Bareiss fraction-free elimination.
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(Rat(1));
  for (size_t k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      size_t swap = k + 1;
      while (swap < size && M[swap][k].is_zero()) ++swap;
      if (swap == size) return MultiPoly();  // singular: resultant is zero
      std::swap(M[k], M[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < size; ++i) {
      for (size_t j = k + 1; j < size; ++j) {
        MultiPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = num.is_zero() ? num : num.divexact(prev);
      }
      M[i][k] = MultiPoly();
    }
    prev = M[k][k];
  }
  MultiPoly det = M[size - 1][size - 1];
  return sign > 0 ? det : -det;
}

Interval interval_eval(const MultiPoly& f, const std::map<int, Interval>& box) {
  Interval acc = Interval::point(Rat(0));
  for (const auto& [m, c] : f.terms()) {
    Interval term = Interval::point(c);
    for (const auto& [v, x] : m.entries()) {
      auto it = box.find(v);
      if (it == box.end()) throw error("interval_eval: missing variable binding");
      term = term * ipow(it->second, static_cast<unsigned>(x));
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace expansive
