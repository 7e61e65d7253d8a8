#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qreal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws InvalidInput on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

inline int sign(const Rational& value) { return sgn(value); }

/// Natural log of |value| for arbitrarily large integers.
double log_abs(const Integer& value);

}  // namespace qreal
