#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace jmfree {

// Exact arithmetic types. All coefficients, weights and state values in the
// library are mpq_class; floating point appears only in reporting layers.
using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" (or "p" when q == 1) rendering.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p/q" etc.; accepts surrounding whitespace.
inline Rational rational_from_string(std::string_view text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos)
    throw std::invalid_argument("rational_from_string: empty string");
  std::string s(text.substr(b, e - b + 1));
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rational_pow(const Rational& base, unsigned long exp) {
  Rational r(1);
  Rational b = base;
  unsigned long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// Falling factorial (n)_k = n(n-1)...(n-k+1); (n)_0 = 1.
inline Integer falling_factorial(long n, long k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  Integer r(1);
  for (long i = 0; i < k; ++i) r *= Integer(n - i);
  return r;
}

inline Integer factorial(long n) { return falling_factorial(n, n); }

}  // namespace jmfree
