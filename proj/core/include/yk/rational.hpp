#ifndef YK_RATIONAL_HPP
#define YK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "yk/error.hpp"

namespace yk {

// Exact rational numbers with unbounded integer parts. The backing type
// keeps gcd(|num|, den) = 1 and den > 0 as invariants.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw Error("division by zero in rational_pow");
    return rational_pow(Rational(denominator(base), numerator(base)), -exp);
  }
  Rational acc(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// Canonical text form: "num" when integral, "num/den" otherwise.
inline std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace yk

#endif
