#pragma once

#include <gmpxx.h>

#include <string>

namespace qetude {

/// Arbitrary-precision integers and rationals. mpq_class keeps values in
/// lowest terms with a positive denominator, so 0 is always 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace qetude
