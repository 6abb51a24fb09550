#pragma once

// Arbitrary-precision scalars used on every exact path. Backed by GMP's C++
// bindings; mpq_class arithmetic keeps results canonical (lowest terms,
// positive denominator).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qseries {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "-0.25" or "1.5e-3".
/// Decimals are converted from their digits (0.25 -> 1/4), never through a double.
/// Throws ParseError on malformed text or a zero denominator.
ExactRational parse_rational(std::string_view text);

/// Exact rational from a finite double (every finite double is a dyadic rational).
/// Throws DomainError for NaN or infinity.
ExactRational rational_from_double(double value);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const ExactRational& value);
std::string to_string(const ExactInteger& value);

double to_double(const ExactRational& value);

/// Natural log of |value| for value != 0, accurate for magnitudes far beyond
/// double range: uses the leading mantissa and the binary exponent separately.
double log_abs(const ExactInteger& value);
double log_abs(const ExactRational& value);

}  // namespace qseries
