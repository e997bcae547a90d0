#include "wreath/rational.hpp"

#include "wreath/errors.hpp"

namespace wreath {

std::string fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

static Int parse_int(std::string_view s) {
  if (s.empty()) throw Error("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error("bad integer literal '" + std::string(s) + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw Error("bad integer literal '" + std::string(s) + "'");
  return Int(std::string(s));
}

Rational parse_fraction(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return make_fraction(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational make_fraction(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("zero denominator in fraction");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

Int int_pow(const Int& base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace wreath
