#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace capcone {

using Int = boost::multiprecision::cpp_int;

// Exact rational arithmetic.  cpp_rational keeps every value in lowest terms
// with a positive denominator, which bounds coefficient growth along long
// reduction and wall-crossing runs.  No floating point anywhere in the core.
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0).  Throws std::invalid_argument on
// anything else, including empty strings, whitespace and a zero denominator.
Rat parse_rational(const std::string& text);

// Inverse of parse_rational: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& value);

Int rat_ceil(const Rat& value);

inline Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

}  // namespace capcone
