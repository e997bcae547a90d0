#include "wreath/multipoly.hpp"

#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

// ---------- Monomial ----------

Monomial Monomial::variable(VarId v, unsigned exp) {
  Monomial mo;
  if (exp > 0) mo.factors_.emplace_back(v, exp);
  return mo;
}

unsigned Monomial::degree_in(VarId v) const {
  for (const auto& [var, exp] : factors_)
    if (var == v) return exp;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == factors_.end() || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  return out;
}

void Monomial::collect_variables(std::set<VarId>& out) const {
  for (const auto& [var, exp] : factors_) out.insert(var);
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [var, exp] : factors_) {
    if (!first) os << "*";
    os << "u" << var;
    if (exp > 1) os << "^" << exp;
    first = false;
  }
  return os.str();
}

// ---------- MultiPoly ----------

MultiPoly MultiPoly::constant(CycloScalar c) {
  MultiPoly p(c.modulus());
  p.add_term(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::from_rational(unsigned m, const Rational& q) {
  return constant(CycloScalar::from_rational(m, q));
}

MultiPoly MultiPoly::variable(unsigned m, VarId v) {
  MultiPoly p(m);
  p.add_term(Monomial::variable(v), CycloScalar::one(m));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

CycloScalar MultiPoly::constant_value() const {
  if (terms_.empty()) return CycloScalar::zero(m_);
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

std::set<VarId> MultiPoly::variables() const {
  std::set<VarId> out;
  for (const auto& [mono, c] : terms_) mono.collect_variables(out);
  return out;
}

unsigned MultiPoly::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree_in(v));
  return d;
}

void MultiPoly::add_term(const Monomial& mono, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono, -c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(m_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(a.m_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

MultiPoly MultiPoly::scaled(const CycloScalar& c) const {
  MultiPoly out(m_);
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.m_ != b.m_)
    throw MixedModulus("cannot compare polynomials over different cyclotomic fields");
  return a.terms_ == b.terms_;
}

std::map<unsigned, MultiPoly> MultiPoly::by_variable(VarId v) const {
  std::map<unsigned, MultiPoly> out;
  for (const auto& [mono, c] : terms_) {
    unsigned e = mono.degree_in(v);
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, MultiPoly(m_)).first;
    it->second.add_term(mono.without(v), c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(VarId v, const CycloScalar& value) const {
  MultiPoly out(m_);
  CycloScalar power = CycloScalar::one(m_);
  unsigned cur = 0;
  for (const auto& [e, part] : by_variable(v)) {
    while (cur < e) {
      power = power * value;
      ++cur;
    }
    out = out + part.scaled(power);
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_linear(VarId v, const CycloScalar& root) const {
  if (is_zero()) return MultiPoly(m_);
  auto parts = by_variable(v);
  const unsigned d = parts.rbegin()->first;
  if (d == 0) return std::nullopt;  // v absent and P != 0
  // Synthetic division: P = sum A_e v^e = (v - root) Q + R with
  // B_{e-1} = A_e + root * B_e (B_d = 0) and R = A_0 + root * B_0.
  MultiPoly quot(m_);
  MultiPoly b(m_);
  for (unsigned e = d; e >= 1; --e) {
    auto it = parts.find(e);
    MultiPoly a_e = (it == parts.end()) ? MultiPoly(m_) : it->second;
    b = a_e + b.scaled(root);
    Monomial shift = Monomial::variable(v, e - 1);
    for (const auto& [mono, c] : b.terms()) quot.add_term(mono.times(shift), c);
  }
  auto it0 = parts.find(0);
  MultiPoly rem = (it0 == parts.end()) ? MultiPoly(m_) : it0->second;
  rem = rem + b.scaled(root);
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::vector<CycloScalar> MultiPoly::univariate_coeffs(VarId v) const {
  std::vector<CycloScalar> out(degree_in(v) + 1, CycloScalar::zero(m_));
  for (const auto& [mono, c] : terms_) {
    unsigned e = mono.degree_in(v);
    if (!mono.without(v).is_constant())
      throw Error("polynomial is not univariate in the requested variable");
    out[e] = out[e] + c;
  }
  return out;
}

MultiPoly MultiPoly::from_univariate(unsigned m, VarId v, const std::vector<CycloScalar>& coeffs) {
  MultiPoly out(m);
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    out.add_term(Monomial::variable(v, static_cast<unsigned>(e)), coeffs[e]);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    if (!mono.is_constant()) os << "*" << mono.to_string();
    first = false;
  }
  return os.str();
}

}  // namespace wreath
