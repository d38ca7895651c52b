#pragma once

#include <gmpxx.h>

#include <string>

namespace mflab {

// GMP keeps mpq_class canonical (gcd 1, positive denominator) after every
// arithmetic operation; constructors taking (num, den) are canonicalized by
// make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

Rational pow(const Rational& base, int exponent);

/// True when the reduced denominator has no prime factors besides 2 and 3.
bool is_in_z_sixth(const Rational& r);

}  // namespace mflab
