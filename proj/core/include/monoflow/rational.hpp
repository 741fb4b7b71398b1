#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace monoflow {

using Rational = boost::rational<std::int64_t>;

/// Formats as "num/den" (denominator always printed).
std::string to_string(const Rational& r);

/// Accepts "a", "a/b" and "-a/b". Throws ParseError(0, ...) on bad input.
Rational parse_rational(std::string_view text);

/// Floor of a rational as an integer.
std::int64_t floor_of(const Rational& r);

/// r mod m in [0, m) for m > 0.
Rational mod_positive(const Rational& r, const Rational& m);

}  // namespace monoflow
