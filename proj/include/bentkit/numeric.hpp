#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string_view>

namespace bentkit {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);  // 0 outside 0 <= k <= n

/// Number of k-dimensional linear subspaces of F_2^n.
BigInt gaussian_binomial2(int n, int k);

/// |GL(n, 2)| = prod_{i<n} (2^n - 2^i).
BigInt gl2_order(int n);

/// log2 of a positive integer, correct to double precision for any size.
double log2_big(const BigInt& x);

/// Parses a non-negative decimal string; throws ParseError.
BigInt parse_decimal(std::string_view text);

}  // namespace bentkit
