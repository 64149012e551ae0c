#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wnk {

// The only scalar type of the library. mpq_class keeps values canonical
// (lowest terms, positive denominator) under arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// "p" or "p/q"
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("parse_rational: bad literal '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// a(a-1)...(a-k+1)/k! for rational a, integer k >= 0
inline Rational binomial(const Rational& a, int k) {
  Rational r(1);
  for (int l = 0; l < k; ++l) r *= a - l;
  return r / Rational(factorial(k));
}

inline Rational pow_int(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  int n = e > 0 ? e : -e;
  Rational r(1);
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace wnk
