#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace totalparts {

/// Exact fraction, always in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline int sign_of(const Rational& q) { return sgn(q); }

/// Parses "a", "a/b", "-a/b" (whitespace tolerated). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

Integer binomial(long n, long k);
Integer factorial(long n);

/// Decimal rendering rounded to `digits` places (display only).
std::string to_decimal(const Rational& q, int digits);

} // namespace totalparts
