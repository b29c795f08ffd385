#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rihahn {

/// Exact arbitrary-precision rational, the universal scalar type of the
/// library. GMP keeps values in canonical form (positive denominator,
/// gcd-reduced) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws ZeroDivisor if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (optionally signed). Throws std::invalid_argument
/// on malformed input and ZeroDivisor on a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical serialization: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// value^exponent for any integer exponent; negative exponents require a
/// nonzero base (ZeroDivisor otherwise).
Rational pow_int(const Rational& base, long exponent);

bool is_integer(const Rational& value);

/// True iff value is an integer inside [lo, hi].
bool is_integer_in(const Rational& value, long lo, long hi);

/// Exact conversion of an integral Rational that fits in a long.
long to_long(const Rational& value);

} // namespace rihahn
