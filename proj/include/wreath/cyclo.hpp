#pragma once
// Exact arithmetic in the cyclotomic field Q(z) where z is a primitive m-th
// root of unity.  Elements are residues modulo the m-th cyclotomic polynomial
// Phi_m, stored as coefficient vectors of length deg Phi_m.

#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

// Coefficients of Phi_m, lowest degree first, monic.  Phi_1 = x - 1.
std::vector<Int> cyclotomic_polynomial(unsigned m);

// Shared per-m context: the minimal polynomial and its degree.  Instances
// are interned and live for the whole process.
class CycloField {
 public:
  static const CycloField& get(unsigned m);

  unsigned modulus() const { return m_; }
  unsigned degree() const { return degree_; }
  const std::vector<Int>& min_poly() const { return phi_; }

  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

 private:
  explicit CycloField(unsigned m);
  unsigned m_;
  unsigned degree_;
  std::vector<Int> phi_;
};

class CycloScalar {
 public:
  static CycloScalar zero(unsigned m);
  static CycloScalar one(unsigned m);
  static CycloScalar from_rational(unsigned m, const Rational& q);
  // z^k with k taken mod m (negative k allowed).
  static CycloScalar root_of_unity(unsigned m, long k);
  // xi_k = z^(k-1) for k in 1..m; the k-th point on the standard list of
  // m-th roots of unity.
  static CycloScalar xi(unsigned m, unsigned k);
  // Raw residue from coefficients (length must be deg Phi_m).
  static CycloScalar from_coeffs(unsigned m, std::vector<Rational> coeffs);

  unsigned modulus() const { return field_->modulus(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  CycloScalar inverse() const;  // DivisionByZero on zero
  CycloScalar pow(long e) const;

  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b);
  CycloScalar operator-() const;

  // MixedModulus if the operands live in different fields.
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  CycloScalar(const CycloField* field, std::vector<Rational> coeffs);
  const CycloField* field_;
  std::vector<Rational> coeffs_;
};

}  // namespace wreath
