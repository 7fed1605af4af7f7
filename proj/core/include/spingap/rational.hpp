#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spingap {

// Exact arithmetic used for all analytic coefficients. GMP keeps values in
// canonical reduced form; nothing here ever rounds.
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);

/// H_n = sum_{k=1}^{n} 1/k, with H_0 = 0.
Rational harmonic_number(unsigned long n);

/// base^exp for integer exp of either sign (base != 0 when exp < 0).
Rational pow_rational(const Rational& base, long exp);

/// 2^exp, exp of either sign.
Rational pow2(long exp);

/// 10^exp, exp of either sign.
Rational pow10_rational(long exp);

/// Parses a plain decimal string, optionally signed and with an e/E
/// exponent ("0.5", "-3", "1e-3", "2.25e+2"). The result is exact; the
/// denominator always divides a power of ten.
Rational rational_from_decimal(std::string_view text);

/// Renders a rational with 10-smooth denominator as an exact positional
/// decimal string ("1/2" -> "0.5"). Throws InvalidField otherwise.
std::string decimal_from_rational(const Rational& value);

/// True when the reduced denominator is of the form 2^a * 5^b.
bool has_terminating_decimal(const Rational& value);

/// Smallest k with 10^k >= value, i.e. ceil(log10(value)) computed with
/// exact integer comparisons. Requires value > 0.
long ceil_log10(const Rational& value);

}  // namespace spingap
