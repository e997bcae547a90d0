#pragma once
// Exact arbitrary-precision integers and rationals.  All arithmetic in the
// library is exact; nothing here ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace wreath {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "numerator/denominator" rendering, denominator always present
// and >= 1 (cpp_rational keeps the canonical reduced form for us).
std::string fraction_string(const Rational& q);

// Accepts "p" or "p/q" with optional leading '-'.
Rational parse_fraction(std::string_view s);

// num/den as an exact rational.  Unlike the two-argument cpp_rational
// constructor this tolerates a negative denominator, and it reports a zero
// denominator as DivisionByZero instead of a library-specific error.
Rational make_fraction(const Int& num, const Int& den);

Int int_pow(const Int& base, unsigned exp);
Int factorial(unsigned n);

}  // namespace wreath
