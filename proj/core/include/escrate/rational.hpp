#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace escrate {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "n/d" or a decimal literal such as "0.15" or "1.5e-3".
/// Decimal literals are expanded exactly, never through a binary float.
Rational parse_rational(std::string_view text);

/// Always "num/den", also for integers ("1/1").
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Natural logarithm of a positive rational; accurate even when the
/// numerator and denominator overflow a double.
double log_rational(const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);

/// n/d in lowest terms. Rational(n, d) does not reduce and must not be used
/// with a non-coprime pair.
Rational ratio(long n, long d);

/// 10^exponent as an exact rational.
Rational decimal_power(long exponent);

int sign(const Rational& q);

} // namespace escrate
