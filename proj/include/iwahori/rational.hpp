#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace iwahori {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b"; the result is canonicalized. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& x);

/// p^e as an exact rational; e may be negative.
Rational power_of(long p, long e);

}  // namespace iwahori
