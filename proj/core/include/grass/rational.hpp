#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grass {

using Rational = mpq_class;

/// Parses "7", "-3/4" or "+2". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string to_string(const Rational& value);

Rational factorial(int n);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace grass
