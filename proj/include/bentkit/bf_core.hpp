#pragma once

#include <bentkit/errors.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bentkit {

/// Largest arity accepted when allocating a truth table. Defaults to 26
/// (8 MiB per table); the BENTKIT_MAX_ARITY environment variable or
/// set_max_arity() overrides it, clamped to [1, 30].
int max_arity();
void set_max_arity(int n);

/// Throws DomainError for n < 1 and ResourceError for n > max_arity().
void check_arity(int n);

/// A point of F^n. Coordinate x_i lives at bit i-1 of `bits`, so the point's
/// truth-table index is `bits` itself.
struct Point {
  int dim = 0;
  std::uint64_t bits = 0;

  static Point from_coordinates(std::span<const int> coords);

  std::uint64_t index() const { return bits; }
  int weight() const;
  int coordinate(int i) const { return static_cast<int>((bits >> (i - 1)) & 1U); }

  friend bool operator==(const Point&, const Point&) = default;
};

int inner_product(const Point& x, const Point& y);

inline int parity(std::uint64_t v) { return __builtin_parityll(v); }
inline int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

/// Boolean function F^n -> F stored as a bit-packed truth table: bit
/// index(x) holds f(x). Bits past 2^n in the last word are always zero.
class BooleanFunction {
 public:
  /// Constant-zero function of arity n.
  explicit BooleanFunction(int arity);

  static BooleanFunction from_words(int arity, std::vector<std::uint64_t> words);
  static BooleanFunction constant(int arity, bool value);

  int arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }

  bool bit(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1U;
  }
  void set_bit(std::uint64_t index, bool value) {
    const std::uint64_t m = std::uint64_t{1} << (index & 63);
    if (value) {
      words_[index >> 6] |= m;
    } else {
      words_[index >> 6] &= ~m;
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int arity_;
  std::vector<std::uint64_t> words_;
};

/// Orders functions of equal arity by their truth table read as an unsigned
/// integer (bit 0 least significant).
bool table_less(const BooleanFunction& a, const BooleanFunction& b);

std::size_t word_count(int arity);

BooleanFunction make_function(int n, std::span<const std::uint8_t> bits);
bool evaluate(const BooleanFunction& f, const Point& x);
std::uint64_t weight(const BooleanFunction& f);
BooleanFunction xor_add(const BooleanFunction& f, const BooleanFunction& g);

/// `bf:<n>:<hex>`; hex holds ceil(2^n / 4) digits, most significant first.
BooleanFunction parse_bf(std::string_view text);
std::string format_bf(const BooleanFunction& f);

}  // namespace bentkit
