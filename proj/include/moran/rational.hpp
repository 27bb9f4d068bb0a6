#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace moran {

/// Exact arbitrary-precision rational. mpq_class keeps values canonical
/// (lowest terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den);

/// Parses "a/b", an integer, or a decimal literal ("0.25", "2.5e-1") into the
/// exact rational it denotes. Decimals are never routed through a double.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// log|r| for r != 0, accurate even when |r| is far outside double range.
double log_abs(const Rational& r);

/// base^exp by repeated squaring.
Rational pow(const Rational& base, unsigned long exp);

}  // namespace moran
