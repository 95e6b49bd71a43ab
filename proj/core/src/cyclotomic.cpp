#include "expansive/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace expansive {

namespace {

UniPoly x_pow_minus_one(unsigned n) {
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = Rat(-1);
  c[n] = Rat(1);
  return UniPoly(std::move(c));
}

std::map<unsigned, UniPoly> g_cyclo_cache;
std::mutex g_cyclo_mutex;

UniPoly compute_cyclotomic(unsigned q) {
  UniPoly p = x_pow_minus_one(q);
  for (unsigned d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    p = p.divexact(cyclotomic_polynomial(d));
  }
  return p;
}

UniPoly reduce_mod_cyclotomic(const UniPoly& p, unsigned q) {
  return UniPoly::divmod(p, cyclotomic_polynomial(q)).second;
}

UniPoly substitute_power(const UniPoly& p, unsigned k, unsigned q) {
  // p(zeta^k) as a polynomial in zeta, reduced mod Phi_q.
  UniPoly acc;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(static_cast<size_t>(i)) == 0) continue;
    unsigned e = static_cast<unsigned>((static_cast<unsigned long long>(i) * k) % q);
    acc = acc + UniPoly::monomial(static_cast<int>(e), p.coeff(static_cast<size_t>(i)));
  }
  return reduce_mod_cyclotomic(acc, q);
}

}  // namespace

const UniPoly& cyclotomic_polynomial(unsigned q) {
  if (q == 0) throw error("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(q);
    if (it != g_cyclo_cache.end()) return it->second;
  }
  UniPoly p = compute_cyclotomic(q);
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return g_cyclo_cache.emplace(q, std::move(p)).first->second;
}

CycValue::CycValue(unsigned q, UniPoly rep) : q_(q), rep_(std::move(rep)) {
  if (q_ == 0) throw error("cyclotomic order must be positive");
  if (rep_.degree() >= cyclotomic_polynomial(q_).degree())
    rep_ = reduce_mod_cyclotomic(rep_, q_);
}

CycValue CycValue::root_power(unsigned q, long k) {
  long r = k % static_cast<long>(q);
  if (r < 0) r += q;
  return CycValue(q, UniPoly::monomial(static_cast<int>(r)));
}

CycValue CycValue::embed(unsigned Q) const {
  if (Q == q_) return *this;
  if (Q % q_ != 0) throw error("cyclotomic embed: order mismatch");
  unsigned s = Q / q_;
  UniPoly acc;
  for (int i = 0; i <= rep_.degree(); ++i) {
    if (rep_.coeff(static_cast<size_t>(i)) == 0) continue;
    acc = acc + UniPoly::monomial(static_cast<int>(i * s), rep_.coeff(static_cast<size_t>(i)));
  }
  return CycValue(Q, std::move(acc));
}

namespace {
unsigned lcm_u(unsigned a, unsigned b) {
  unsigned long long g = std::gcd(a, b);
  return static_cast<unsigned>(a / g * static_cast<unsigned long long>(b));
}
}  // namespace

CycValue CycValue::operator+(const CycValue& o) const {
  unsigned Q = lcm_u(q_, o.q_);
  return CycValue(Q, embed(Q).rep_ + o.embed(Q).rep_);
}

CycValue CycValue::operator-(const CycValue& o) const { return *this + (-o); }

CycValue CycValue::operator*(const CycValue& o) const {
  unsigned Q = lcm_u(q_, o.q_);
  return CycValue(Q, reduce_mod_cyclotomic(embed(Q).rep_ * o.embed(Q).rep_, Q));
}

CycValue CycValue::operator-() const { return CycValue(q_, -rep_); }

bool CycValue::operator==(const CycValue& o) const { return (*this - o).is_zero(); }

CycValue CycValue::conj() const {
  if (q_ == 1) return *this;
  return CycValue(q_, substitute_power(rep_, q_ - 1, q_));
}

std::optional<Rat> CycValue::as_rational() const {
  if (!rep_.is_constant()) return std::nullopt;
  return rep_.coeff(0);
}

bool CycValue::unit_modulus() const { return (*this * conj()).is_one(); }

CycValue CycValue::unit_inverse() const {
  if (!unit_modulus()) throw error("unit_inverse: value does not have modulus 1");
  return conj();
}

CycValue CycValue::unit_pow(long k) const {
  if (k == 0) return CycValue::one(q_);
  CycValue base = k > 0 ? *this : unit_inverse();
  unsigned long long n = k > 0 ? static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(-(k + 1)) + 1;
  CycValue acc = CycValue::one(q_);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::optional<Rat> CycValue::exact_turn() const {
  if (rep_.is_zero()) return std::nullopt;
  for (unsigned k = 0; k < q_; ++k) {
    CycValue zk = root_power(q_, static_cast<long>(k));
    if (rep_ == zk.rep_) return Rat(Int(k), Int(q_));
    if (rep_ == (-zk).rep_) {
      Rat t = Rat(Int(k), Int(q_)) + Rat(1, 2);
      t -= Rat(rat_floor(t));
      return t;
    }
  }
  return std::nullopt;
}

std::complex<double> CycValue::approx() const {
  std::complex<double> z(0, 0);
  for (int i = 0; i <= rep_.degree(); ++i) {
    double c = to_double(rep_.coeff(static_cast<size_t>(i)));
    if (c == 0) continue;
    double ang = 2.0 * std::numbers::pi * i / q_;
    z += c * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

}  // namespace expansive
