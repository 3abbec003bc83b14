#include <bentkit/numeric.hpp>

#include <bentkit/errors.hpp>

#include <cmath>
#include <string>

namespace bentkit {

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt gaussian_binomial2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (BigInt(1) << (n - i)) - 1;
    den *= (BigInt(1) << (i + 1)) - 1;
  }
  return num / den;
}

BigInt gl2_order(int n) {
  BigInt r = 1;
  const BigInt full = BigInt(1) << n;
  for (int i = 0; i < n; ++i) r *= full - (BigInt(1) << i);
  return r;
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log2 of a non-positive integer");
  const auto top = static_cast<long>(boost::multiprecision::msb(x));
  if (top < 53) return std::log2(x.convert_to<double>());
  const long shift = top - 60;
  const BigInt head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal string");
  BigInt r = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("invalid decimal string '" + std::string(text) + "'");
    r = r * 10 + (c - '0');
  }
  return r;
}

}  // namespace bentkit
