#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace avq {

/// Arbitrary-precision signed integer. Every quantity in this library is an
/// exact integer; no floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;

/// Floor of the square root of a nonnegative integer.
Int isqrt(const Int& x);

/// If x is a perfect square, stores its nonnegative root and returns true.
bool is_perfect_square(const Int& x, Int& root);

/// binom(n, k) as an exact integer (0 when k < 0 or k > n).
Int binomial(int n, int k);

/// Strict decimal parse; throws std::invalid_argument on malformed input.
Int parse_int(const std::string& text);

std::string to_decimal(const Int& x);

}  // namespace avq
