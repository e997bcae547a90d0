#include "wreath/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

// ---------- integer polynomial helpers (dense, lowest degree first) ----------

static void ztrim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor over Z; the remainder must vanish.
static std::vector<Int> zdiv_exact(std::vector<Int> num, const std::vector<Int>& den) {
  ztrim(num);
  if (num.empty()) return {};
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw Error("non-exact polynomial division");
  std::vector<Int> quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    Int c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw Error("non-exact polynomial division");
  return quot;
}

static const std::vector<Int>& cyclotomic_cached(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<Int>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up so the
  // recursion never re-enters the lock.
  for (unsigned k = 1; k <= m; ++k) {
    if (m % k != 0 || cache.count(k)) continue;
    std::vector<Int> p(k + 1, 0);
    p[0] = -1;
    p[k] = 1;
    for (unsigned d = 1; d < k; ++d)
      if (k % d == 0) p = zdiv_exact(std::move(p), cache.at(d));
    cache.emplace(k, std::move(p));
  }
  return cache.at(m);
}

std::vector<Int> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw IndexOutOfRange("cyclotomic order must be >= 1");
  return cyclotomic_cached(m);
}

// ---------- CycloField ----------

CycloField::CycloField(unsigned m) : m_(m), phi_(cyclotomic_polynomial(m)) {
  degree_ = static_cast<unsigned>(phi_.size() - 1);
}

const CycloField& CycloField::get(unsigned m) {
  if (m == 0) throw IndexOutOfRange("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycloField>> fields;
  std::scoped_lock lock(mu);
  auto it = fields.find(m);
  if (it == fields.end())
    it = fields.emplace(m, std::unique_ptr<CycloField>(new CycloField(m))).first;
  return *it->second;
}

// ---------- rational polynomial helpers for reduction and inversion ----------

static void qtrim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place remainder modulo the monic Phi, then pad to the field degree.
static std::vector<Rational> reduce_mod_phi(const CycloField& f, std::vector<Rational> p) {
  const auto& phi = f.min_poly();
  const std::size_t d = f.degree();
  for (std::size_t k = p.size(); k-- > d;) {
    Rational c = p[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= c * Rational(phi[j]);
  }
  p.resize(d, Rational(0));
  return p;
}

// Polynomial division over Q: num = quot * den + rem, den non-zero.
static void qdivmod(const std::vector<Rational>& num, const std::vector<Rational>& den,
                    std::vector<Rational>& quot, std::vector<Rational>& rem) {
  rem = num;
  qtrim(rem);
  quot.clear();
  if (rem.size() < den.size()) return;
  quot.assign(rem.size() - den.size() + 1, Rational(0));
  const Rational lead = den.back();
  for (std::size_t k = rem.size(); k-- > den.size() - 1;) {
    Rational c = rem[k] / lead;
    if (c == 0) continue;
    quot[k - (den.size() - 1)] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k - (den.size() - 1) + j] -= c * den[j];
  }
  qtrim(rem);
}

// ---------- CycloScalar ----------

CycloScalar::CycloScalar(const CycloField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CycloScalar CycloScalar::zero(unsigned m) {
  const CycloField& f = CycloField::get(m);
  return CycloScalar(&f, std::vector<Rational>(f.degree(), Rational(0)));
}

CycloScalar CycloScalar::one(unsigned m) { return from_rational(m, Rational(1)); }

CycloScalar CycloScalar::from_rational(unsigned m, const Rational& q) {
  CycloScalar r = zero(m);
  r.coeffs_[0] = q;
  return r;
}

CycloScalar CycloScalar::root_of_unity(unsigned m, long k) {
  const CycloField& f = CycloField::get(m);
  long kk = k % static_cast<long>(m);
  if (kk < 0) kk += m;
  std::vector<Rational> p(static_cast<std::size_t>(kk) + 1, Rational(0));
  p.back() = 1;
  return CycloScalar(&f, reduce_mod_phi(f, std::move(p)));
}

CycloScalar CycloScalar::xi(unsigned m, unsigned k) {
  if (k < 1 || k > m) throw IndexOutOfRange("root index out of range 1..m");
  return root_of_unity(m, static_cast<long>(k) - 1);
}

CycloScalar CycloScalar::from_coeffs(unsigned m, std::vector<Rational> coeffs) {
  const CycloField& f = CycloField::get(m);
  if (coeffs.size() != f.degree())
    throw Error("coefficient vector length must equal deg Phi_m");
  return CycloScalar(&f, std::move(coeffs));
}

bool CycloScalar::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycloScalar::rational_value() const {
  if (!is_rational()) throw Error("scalar is not rational");
  return coeffs_[0];
}

static void check_same_field(const CycloScalar& a, const CycloScalar& b) {
  if (a.modulus() != b.modulus())
    throw MixedModulus("cannot combine scalars over different cyclotomic fields");
}

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
  check_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return CycloScalar(a.field_, std::move(c));
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
  check_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return CycloScalar(a.field_, std::move(c));
}

CycloScalar CycloScalar::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (Rational& x : c) x = -x;
  return CycloScalar(field_, std::move(c));
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  check_same_field(a, b);
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloScalar(a.field_, reduce_mod_phi(*a.field_, std::move(prod)));
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic scalar");
  // Extended Euclid in Q[x] against Phi_m.  Phi_m is irreducible over Q, so
  // the gcd with any non-zero residue is a non-zero constant.
  std::vector<Rational> r0, r1 = coeffs_;
  qtrim(r1);
  r0.reserve(field_->min_poly().size());
  for (const Int& c : field_->min_poly()) r0.emplace_back(c);
  std::vector<Rational> s0 = {}, s1 = {Rational(1)};  // s tracks the coefficient of *this
  while (!r1.empty()) {
    std::vector<Rational> q, rem;
    qdivmod(r0, r1, q, rem);
    // s2 = s0 - q * s1
    std::vector<Rational> s2 = s0;
    if (!q.empty() && !s1.empty()) {
      s2.resize(std::max(s2.size(), q.size() + s1.size() - 1), Rational(0));
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
      }
    }
    qtrim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error("cyclotomic inverse: unexpected non-constant gcd");
  const Rational g = r0[0];
  for (Rational& c : s0) c /= g;
  return CycloScalar(field_, reduce_mod_phi(*field_, std::move(s0)));
}

CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloScalar base = *this;
  CycloScalar acc = CycloScalar::one(modulus());
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  check_same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string CycloScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << fraction_string(coeffs_[i]);
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace wreath
