#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rigidity {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;

/// Exponent of the indeterminate g; also the type of a fixed-point weight.
using Exponent = std::int64_t;

/// Builds a canonical rational num/den. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// Exact power with a signed exponent; base must be nonzero when exp < 0.
Rational pow(const Rational& base, Exponent exp);

}  // namespace rigidity
