#pragma once

#include <gmpxx.h>

#include <string>

namespace qjfrac {

// Exact scalar field. mpq_class keeps gcd(|num|, den) = 1 and den > 0 after
// every arithmetic operation; values built from a raw numerator/denominator
// pair must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qjfrac
