#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace patgen {

using Fraction = boost::multiprecision::cpp_rational;

/// Fixed-point rendering with round-half-even, e.g. 76/87 -> "0.873563".
std::string to_decimal(const Fraction& value, unsigned digits = 6);

/// "num/den", or just "num" for integers.
std::string to_exact(const Fraction& value);

}  // namespace patgen
