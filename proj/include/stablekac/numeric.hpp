#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stablekac {

/// Arbitrary-precision integer used for multiplicities and exact products.
using Integer = boost::multiprecision::cpp_int;
/// Exact rational number.
using Rational = boost::multiprecision::cpp_rational;

/// Machine integer for combinatorial indices (parts, ε-indices, levels).
using Index = std::int64_t;

inline std::string to_decimal(const Integer& v) { return v.str(); }

/// "P/Q" in lowest terms, or "P" when the denominator is 1.
std::string to_decimal(const Rational& v);

/// Parses "P" or "P/Q"; throws InvalidInput on malformed text or Q = 0.
Rational parse_rational(const std::string& text);

}  // namespace stablekac
