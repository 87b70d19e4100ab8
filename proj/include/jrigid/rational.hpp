#pragma once

#include <gmpxx.h>

#include <string>

#include "jrigid/error.hpp"

namespace jrigid {

// Exact arbitrary-precision arithmetic, backed by GMP.  mpq_class keeps
// fractions canonical (reduced, positive denominator) at all times.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  require(den != 0, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a" or "a/b" with optional sign.
inline Rational parse_rational(const std::string& text) {
  require(!text.empty(), "empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw MathError("bad rational literal: '" + text + "'");
  require(r.get_den() != 0, "rational literal with zero denominator");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// True when every prime dividing den(r) also divides base, i.e. r lies in
// Z[1/base].
inline bool denominator_divides_power_of(const Rational& r, const Integer& base) {
  Integer d = r.get_den();
  if (d == 1) return true;
  if (base == 0) return false;
  Integer b = abs(base);
  while (d != 1) {
    Integer g = gcd(d, b);
    if (g == 1) return false;
    while (d % g == 0) d /= g;
  }
  return true;
}

}  // namespace jrigid
