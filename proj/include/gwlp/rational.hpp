#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace gwlp {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
/// Fixed-point decimal with `digits` places after the point.
std::string to_decimal(const Rational& value, int digits = 4);
/// Parses "p", "p/q" or a plain decimal with at most 18 fractional digits.
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& value) { return boost::rational_cast<double>(value); }

}  // namespace gwlp
