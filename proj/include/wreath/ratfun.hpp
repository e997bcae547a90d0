#pragma once
// Rational functions num/den over a cyclotomic field.  Representations are
// not kept globally reduced; exact cancellation happens on substitution,
// and equality is decided by cross-multiplication.

#include "wreath/multipoly.hpp"

namespace wreath {

class RatFun {
 public:
  // DivisionByZero if den is the zero polynomial.
  RatFun(MultiPoly num, MultiPoly den);

  static RatFun zero(unsigned m);
  static RatFun one(unsigned m);
  static RatFun from_scalar(const CycloScalar& c);
  static RatFun from_rational(unsigned m, const Rational& q);
  static RatFun variable(unsigned m, VarId v);

  unsigned modulus() const { return num_.modulus(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::set<VarId> variables() const;

  RatFun reciprocal() const;  // DivisionByZero on zero
  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);

  // Value equality (cross-multiplied).
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // Substitute v = value after cancelling every common (v - value) factor
  // from numerator and denominator.  If the denominator still vanishes at
  // the point, the substitution is a genuine pole: SingularSubstitution.
  RatFun cancel_and_substitute(VarId v, const CycloScalar& value) const;

  // Requires no free variables.
  CycloScalar evaluate_constant() const;

  std::string to_string() const;

 private:
  MultiPoly num_, den_;
};

}  // namespace wreath
