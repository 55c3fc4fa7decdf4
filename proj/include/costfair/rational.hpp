#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace costfair {

/// Exact rational number. All monetary amounts and item shares are kept
/// exact end to end; fairness verdicts compare payoffs against 0 with no
/// tolerance, so floating point is never used for protocol quantities.
using Rat = mpq_class;

/// Builds a canonicalized rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);

/// Parses "42", "-3/4" or "0.125" into an exact rational.
/// Returns nullopt on malformed input (including a zero denominator).
std::optional<Rat> parse_rat(std::string_view text);

/// Canonical rendering: "n" for integers, "n/d" in lowest terms otherwise.
std::string format_rat(const Rat& value);

/// Renders with exactly two decimal places, rounding half to even.
/// The rounding step is the only inexact operation in the library and is
/// applied to display output only.
std::string format_fixed2(const Rat& value);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace costfair
