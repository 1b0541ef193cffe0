#pragma once

// Scalar layer: arbitrary-precision integers and rationals (GMP) plus the
// integer combinatorics used by every matrix family.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace asmlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the support convention used throughout:
/// zero unless 0 <= b <= a.
inline Integer binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

/// Generalized binomial a(a-1)...(a-b+1)/b! for any integer a and b >= 0,
/// zero for b < 0. Differs from binom only when a < 0.
inline Integer binomGeneralized(long a, long b) {
  if (b < 0) return 0;
  Integer r;
  const Integer top = a;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Rising factorial (a)_k = a(a+1)...(a+k-1).
inline Integer risingFactorial(long a, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= a + i;
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// base^e for any integer e; base must be nonzero when e < 0.
inline Rational rpow(const Rational& base, long e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline Rational makeRational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string toString(const Integer& x) { return x.get_str(); }
inline std::string toString(const Rational& x) { return x.get_str(); }

inline bool isIntegral(const Rational& x) { return x.get_den() == 1; }

/// Parses "a" or "a/b".
inline Rational parseRational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace asmlab
