#pragma once
// Sparse multivariate polynomials over a cyclotomic field.  Variables are
// plain numeric ids; a polynomial's scope is simply the set of variables
// appearing with non-zero exponent.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wreath/cyclo.hpp"

namespace wreath {

using VarId = std::uint32_t;

// Product of variable powers; factors sorted by variable id, exponents >= 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, unsigned exp = 1);

  bool is_constant() const { return factors_.empty(); }
  unsigned degree_in(VarId v) const;
  const std::vector<std::pair<VarId, unsigned>>& factors() const { return factors_; }
  Monomial times(const Monomial& other) const;
  Monomial without(VarId v) const;
  void collect_variables(std::set<VarId>& out) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  std::string to_string() const;

 private:
  std::vector<std::pair<VarId, unsigned>> factors_;
};

class MultiPoly {
 public:
  explicit MultiPoly(unsigned m) : m_(m) {}  // zero polynomial
  static MultiPoly constant(CycloScalar c);
  static MultiPoly from_rational(unsigned m, const Rational& q);
  static MultiPoly variable(unsigned m, VarId v);

  unsigned modulus() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  CycloScalar constant_value() const;  // requires is_constant()
  std::set<VarId> variables() const;
  unsigned degree_in(VarId v) const;
  const std::map<Monomial, CycloScalar>& terms() const { return terms_; }

  void add_term(const Monomial& mono, const CycloScalar& c);

  MultiPoly substitute(VarId v, const CycloScalar& value) const;
  // Exact quotient by (v - root), or nullopt when the remainder is non-zero.
  std::optional<MultiPoly> divide_linear(VarId v, const CycloScalar& root) const;

  MultiPoly scaled(const CycloScalar& c) const;
  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Dense coefficients in v, lowest degree first; requires that no other
  // variable appears.  The zero polynomial yields {0}.
  std::vector<CycloScalar> univariate_coeffs(VarId v) const;
  static MultiPoly from_univariate(unsigned m, VarId v, const std::vector<CycloScalar>& coeffs);

  std::string to_string() const;

 private:
  // Decompose as sum_e A_e * v^e with v removed from the keys of A_e.
  std::map<unsigned, MultiPoly> by_variable(VarId v) const;

  unsigned m_;
  std::map<Monomial, CycloScalar> terms_;
};

}  // namespace wreath
