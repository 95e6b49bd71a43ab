#include "expansive/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace expansive {

ExponentVector::ExponentVector(std::vector<std::pair<int, int>> entries) : e_(std::move(entries)) {
  std::sort(e_.begin(), e_.end());
  std::erase_if(e_, [](const auto& p) { return p.second == 0; });
  for (size_t i = 0; i + 1 < e_.size(); ++i)
    if (e_[i].first == e_[i + 1].first) throw error("duplicate variable in exponent vector");
  for (const auto& [v, x] : e_) {
    (void)x;
    if (v < 1) throw error("variable indices are 1-based");
  }
}

ExponentVector ExponentVector::unit(int var, int exp) {
  return ExponentVector({{var, exp}});
}

int ExponentVector::exponent(int var) const {
  for (const auto& [v, x] : e_)
    if (v == var) return x;
  return 0;
}

void ExponentVector::set(int var, int exp) {
  if (var < 1) throw error("variable indices are 1-based");
  auto it = std::find_if(e_.begin(), e_.end(), [&](const auto& p) { return p.first == var; });
  if (it != e_.end()) {
    if (exp == 0)
      e_.erase(it);
    else
      it->second = exp;
    return;
  }
  if (exp == 0) return;
  e_.emplace_back(var, exp);
  std::sort(e_.begin(), e_.end());
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (const auto& [v, x] : o.e_) r.set(v, r.exponent(v) + x);
  return r;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector r = *this;
  for (auto& [v, x] : r.e_) {
    (void)v;
    x = -x;
  }
  return r;
}

long ExponentVector::total_degree() const {
  long d = 0;
  for (const auto& [v, x] : e_) {
    (void)v;
    d += x;
  }
  return d;
}

long ExponentVector::abs_degree() const {
  long d = 0;
  for (const auto& [v, x] : e_) {
    (void)v;
    d += std::abs(x);
  }
  return d;
}

bool ExponentVector::operator<(const ExponentVector& o) const {
  long da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  // lexicographic on (x1, x2, ...) exponents, missing = 0
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    int va = i < e_.size() ? e_[i].first : INT32_MAX;
    int vb = j < o.e_.size() ? o.e_[j].first : INT32_MAX;
    int v = std::min(va, vb);
    int xa = (va == v) ? e_[i].second : 0;
    int xb = (vb == v) ? o.e_[j].second : 0;
    if (xa != xb) return xa < xb;
    if (va == v) ++i;
    if (vb == v) ++j;
  }
  return false;
}

LaurentPoly LaurentPoly::constant(const Int& c) {
  LaurentPoly p;
  p.add_term(ExponentVector(), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& m, const Int& c) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

void LaurentPoly::add_term(const ExponentVector& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::mul_monomial(const ExponentVector& m, const Int& c) const {
  LaurentPoly r;
  for (const auto& [m1, c1] : t_) r.add_term(m1 + m, c1 * c);
  return r;
}

std::set<int> LaurentPoly::variables() const {
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

Int LaurentPoly::coefficient_sum() const {
  Int s(0);
  for (const auto& [m, c] : t_) {
    (void)m;
    s += c;
  }
  return s;
}

Int LaurentPoly::coeff_abs_sum() const {
  Int s(0);
  for (const auto& [m, c] : t_) {
    (void)m;
    s += abs_int(c);
  }
  return s;
}

bool LaurentPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

Int LaurentPoly::constant_value() const {
  if (t_.empty()) return Int(0);
  if (!is_constant()) throw error("constant_value of non-constant polynomial");
  return t_.begin()->second;
}

bool LaurentPoly::is_unit_monomial() const {
  return t_.size() == 1 && abs_int(t_.begin()->second) == 1;
}

LaurentPoly LaurentPoly::nonnegative_shift() const {
  if (t_.empty()) return *this;
  std::map<int, int> minexp;
  for (const auto& [m, c] : t_) {
    (void)c;
    for (const auto& [v, x] : m.entries()) {
      auto it = minexp.find(v);
      if (it == minexp.end())
        minexp[v] = std::min(x, 0);
      else
        it->second = std::min(it->second, x);
    }
  }
  ExponentVector shift;
  for (const auto& [v, x] : minexp)
    if (x < 0) shift.set(v, -x);
  if (shift.empty()) return *this;
  return mul_monomial(shift);
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Int a = abs_int(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && !m.empty();
    if (!unit) os << a.str();
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

}  // namespace expansive
