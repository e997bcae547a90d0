#include "wreath/ratfun.hpp"

#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

// ---------- dense univariate helpers over CycloScalar ----------

using UPoly = std::vector<CycloScalar>;  // lowest degree first; empty = zero

static void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

static UPoly urem(UPoly num, const UPoly& den) {
  utrim(num);
  while (num.size() >= den.size()) {
    CycloScalar c = num.back() / den.back();
    const std::size_t off = num.size() - den.size();
    for (std::size_t j = 0; j < den.size(); ++j)
      num[off + j] = num[off + j] - c * den[j];
    utrim(num);
  }
  return num;
}

static UPoly udiv_exact(UPoly num, const UPoly& den) {
  utrim(num);
  UPoly quot;
  if (num.size() < den.size()) return quot;
  quot.assign(num.size() - den.size() + 1, CycloScalar::zero(den.back().modulus()));
  while (num.size() >= den.size()) {
    CycloScalar c = num.back() / den.back();
    const std::size_t off = num.size() - den.size();
    quot[off] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[off + j] = num[off + j] - c * den[j];
    utrim(num);
  }
  return quot;
}

static UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = urem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // monic normal form
    CycloScalar lead = a.back();
    for (CycloScalar& c : a) c = c / lead;
  }
  return a;
}

// Strip the univariate gcd of num and den when both involve only var v.
static void univariate_reduce(MultiPoly& num, MultiPoly& den, VarId v) {
  UPoly a = num.univariate_coeffs(v);
  UPoly b = den.univariate_coeffs(v);
  UPoly g = ugcd(a, b);
  if (g.size() <= 1) return;  // constant gcd, nothing to cancel
  const unsigned m = num.modulus();
  utrim(a);
  utrim(b);
  num = MultiPoly::from_univariate(m, v, udiv_exact(std::move(a), g));
  den = MultiPoly::from_univariate(m, v, udiv_exact(std::move(b), g));
}

// ---------- RatFun ----------

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.modulus() != den_.modulus())
    throw MixedModulus("numerator and denominator over different cyclotomic fields");
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) den_ = MultiPoly::from_rational(num_.modulus(), Rational(1));
}

RatFun RatFun::zero(unsigned m) {
  return RatFun(MultiPoly(m), MultiPoly::from_rational(m, Rational(1)));
}

RatFun RatFun::one(unsigned m) { return from_rational(m, Rational(1)); }

RatFun RatFun::from_scalar(const CycloScalar& c) {
  return RatFun(MultiPoly::constant(c), MultiPoly::from_rational(c.modulus(), Rational(1)));
}

RatFun RatFun::from_rational(unsigned m, const Rational& q) {
  return RatFun(MultiPoly::from_rational(m, q), MultiPoly::from_rational(m, Rational(1)));
}

RatFun RatFun::variable(unsigned m, VarId v) {
  return RatFun(MultiPoly::variable(m, v), MultiPoly::from_rational(m, Rational(1)));
}

std::set<VarId> RatFun::variables() const {
  std::set<VarId> out = num_.variables();
  std::set<VarId> dv = den_.variables();
  out.insert(dv.begin(), dv.end());
  return out;
}

RatFun RatFun::reciprocal() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.reciprocal(); }

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFun RatFun::cancel_and_substitute(VarId v, const CycloScalar& value) const {
  MultiPoly n = num_, d = den_;
  auto vars = variables();
  if (vars.size() == 1 && *vars.begin() == v) univariate_reduce(n, d, v);
  // Cancel common (v - value) factors.  A zero numerator divides trivially;
  // the loop still terminates because each pass lowers deg_v(den).
  while (true) {
    auto qn = n.divide_linear(v, value);
    if (!qn) break;
    auto qd = d.divide_linear(v, value);
    if (!qd) break;
    n = std::move(*qn);
    d = std::move(*qd);
  }
  MultiPoly dsub = d.substitute(v, value);
  if (dsub.is_zero()) {
    std::ostringstream os;
    os << "substituting u" << v << " = " << value.to_string() << " hits a pole";
    throw SingularSubstitution(os.str());
  }
  return RatFun(n.substitute(v, value), std::move(dsub));
}

CycloScalar RatFun::evaluate_constant() const {
  if (!variables().empty()) throw Error("rational function still has free variables");
  return num_.constant_value() / den_.constant_value();
}

std::string RatFun::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace wreath
