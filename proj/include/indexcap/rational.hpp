#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace indexcap {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// "p/q" rendering; integers keep the "/1" suffix so JSON consumers always
/// see one shape.
std::string to_pq_string(const Rat& r);
/// Accepts "p/q", "p", or a terminating decimal such as "0.125".
Rat parse_rational(std::string_view text);

/// Decimal rendering truncated (not rounded) to `digits` fractional digits.
std::string to_decimal(const Rat& r, int digits);

/// base^exp for a non-negative exponent.
Rat pow(const Rat& base, unsigned exp);

/// Smallest integer >= r.
BigInt ceil(const Rat& r);

}  // namespace indexcap
