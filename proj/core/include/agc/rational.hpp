#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "agc/errors.hpp"

namespace agc {

/// Exact rational scalar. All symbolic computation in the toolkit runs over
/// these; floating point is confined to the simulator.
using Rational = mpq_class;

/// Parses "n" or "n/d" with an optional leading sign, base 10, d != 0.
/// Anything else (whitespace, hex, floats) is rejected.
Rational parse_rational(std::string_view text);

/// Canonical textual form, "n" or "n/d" with gcd(n, d) = 1 and d > 0.
std::string to_string(const Rational& q);

} // namespace agc
