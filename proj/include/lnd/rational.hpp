#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lnd {

/// Exact rational number, always stored in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" with an optional leading sign. Throws InvalidParameters.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational rational_pow(const Rational& base, long exponent);

std::size_t hash_value(const Rational& q) noexcept;

}  // namespace lnd
