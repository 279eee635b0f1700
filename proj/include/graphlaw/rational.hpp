#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace graphlaw {

// Exact rational arithmetic. All measure weights, metric values, and circle
// points in this library are Rational; floating point appears only in
// sampled estimates.
using Rational = mpq_class;

// Parses "p/q" or a bare integer "p". Throws ParseError on anything else or
// on a zero denominator. The result is canonicalized (q > 0, gcd(p,q) = 1).
Rational parse_rational(const std::string& text);

// Always "num/den", even for integers ("3" prints as "3/1").
std::string rational_str(const Rational& q);

// 2^-r as an exact rational.
Rational pow2_inverse(unsigned r);

// Fractional part in [0,1): q - floor(q).
Rational mod_one(const Rational& q);

Rational rational_abs(const Rational& q);

// Decimal with 6 significant digits, for estimate output.
std::string decimal6(double v);

}  // namespace graphlaw
