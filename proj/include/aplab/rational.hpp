#pragma once

#include <gmpxx.h>

#include <string>

namespace aplab {

// Exact rational arithmetic. Interval endpoints, measures and ladder terms all
// stay rational forever; denominators grow geometrically with the iteration
// depth, so everything is backed by arbitrary-precision integers.
using Rational = mpq_class;
using BigInt = mpz_class;

// num/den reduced to lowest terms. den must be nonzero.
Rational make_rational(long num, long den = 1);

// x - floor(x), always in [0,1).
Rational normalize_mod1(const Rational& x);

// "7/288" for fractions, plain "3" for integers.
std::string fraction_str(const Rational& x);

// Inverse of fraction_str: accepts "a/b" or "a" with optional sign.
// Throws InvalidParameter on malformed input or zero denominator.
Rational parse_fraction(const std::string& text);

}  // namespace aplab
