#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flatsurf {

using Rational = mpq_class;

/// Parses "n", "-n" or "p/q". With `require_reduced`, rejects q <= 0 and
/// fractions that are not in lowest terms. Throws std::invalid_argument.
Rational parse_rational(std::string_view text, bool require_reduced = false);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace flatsurf
