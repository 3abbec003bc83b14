#include <bentkit/bf_core.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>

namespace bentkit {
namespace {

constexpr int kDefaultMaxArity = 26;
constexpr int kHardMaxArity = 30;

int initial_max_arity() {
  if (const char* env = std::getenv("BENTKIT_MAX_ARITY")) {
    int value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size()) {
      return std::clamp(value, 1, kHardMaxArity);
    }
  }
  return kDefaultMaxArity;
}

std::atomic<int>& guard() {
  static std::atomic<int> value{initial_max_arity()};
  return value;
}

std::uint64_t tail_mask(int arity) {
  if (arity >= 6) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

int max_arity() { return guard().load(std::memory_order_relaxed); }

void set_max_arity(int n) {
  guard().store(std::clamp(n, 1, kHardMaxArity), std::memory_order_relaxed);
}

void check_arity(int n) {
  if (n < 1) throw DomainError("arity must be >= 1, got " + std::to_string(n));
  if (n > max_arity()) {
    throw ResourceError("arity " + std::to_string(n) + " exceeds guard " +
                        std::to_string(max_arity()) + " (set BENTKIT_MAX_ARITY)");
  }
}

std::size_t word_count(int arity) {
  return arity >= 6 ? std::size_t{1} << (arity - 6) : 1;
}

Point Point::from_coordinates(std::span<const int> coords) {
  if (coords.empty() || coords.size() > 63) {
    throw DomainError("point dimension must be in [1, 63]");
  }
  Point p{static_cast<int>(coords.size()), 0};
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0 && coords[i] != 1) throw DomainError("coordinates must be 0 or 1");
    p.bits |= static_cast<std::uint64_t>(coords[i]) << i;
  }
  return p;
}

int Point::weight() const { return popcount(bits); }

int inner_product(const Point& x, const Point& y) {
  if (x.dim != y.dim) throw DomainError("inner_product: dimension mismatch");
  return parity(x.bits & y.bits);
}

BooleanFunction::BooleanFunction(int arity) : arity_(arity) {
  check_arity(arity);
  words_.assign(word_count(arity), 0);
}

BooleanFunction BooleanFunction::from_words(int arity, std::vector<std::uint64_t> words) {
  BooleanFunction f(arity);
  if (words.size() != f.words_.size()) {
    throw DomainError("from_words: expected " + std::to_string(f.words_.size()) + " words");
  }
  if ((words.back() & ~tail_mask(arity)) != 0) {
    throw DomainError("from_words: bits set beyond 2^n");
  }
  f.words_ = std::move(words);
  return f;
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  BooleanFunction f(arity);
  if (value) {
    std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
    f.words_.back() &= tail_mask(arity);
  }
  return f;
}

bool table_less(const BooleanFunction& a, const BooleanFunction& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  return std::lexicographical_compare(wa.rbegin(), wa.rend(), wb.rbegin(), wb.rend());
}

BooleanFunction make_function(int n, std::span<const std::uint8_t> bits) {
  BooleanFunction f(n);
  if (bits.size() != f.size()) {
    throw DomainError("make_function: expected " + std::to_string(f.size()) + " bits, got " +
                      std::to_string(bits.size()));
  }
  for (std::uint64_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw DomainError("make_function: table entries must be 0 or 1");
    if (bits[i]) f.set_bit(i, true);
  }
  return f;
}

bool evaluate(const BooleanFunction& f, const Point& x) {
  if (x.dim != f.arity()) throw DomainError("evaluate: point dimension != arity");
  return f.bit(x.bits);
}

std::uint64_t weight(const BooleanFunction& f) {
  std::uint64_t w = 0;
  for (auto word : f.words()) w += static_cast<std::uint64_t>(popcount(word));
  return w;
}

BooleanFunction xor_add(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.arity() != g.arity()) throw DomainError("xor_add: arity mismatch");
  BooleanFunction h = f;
  auto out = h.mutable_words();
  auto in = g.words();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= in[i];
  return h;
}

BooleanFunction parse_bf(std::string_view text) {
  if (!text.starts_with("bf:")) throw ParseError("expected 'bf:<n>:<hex>', got '" + std::string(text) + "'");
  text.remove_prefix(3);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':' after arity");
  int n = 0;
  const auto arity_text = text.substr(0, colon);
  auto [ptr, ec] = std::from_chars(arity_text.data(), arity_text.data() + arity_text.size(), n);
  if (ec != std::errc{} || ptr != arity_text.data() + arity_text.size() || arity_text.empty()) {
    throw ParseError("invalid arity '" + std::string(arity_text) + "'");
  }
  if (n < 1) throw ParseError("arity must be >= 1");
  if (n > max_arity()) check_arity(n);

  const auto hex = text.substr(colon + 1);
  const std::uint64_t table_bits = std::uint64_t{1} << n;
  const std::uint64_t digits = (table_bits + 3) / 4;
  if (hex.size() != digits) {
    throw ParseError("arity " + std::to_string(n) + " needs " + std::to_string(digits) +
                     " hex digits, got " + std::to_string(hex.size()));
  }
  BooleanFunction f(n);
  auto words = f.mutable_words();
  for (std::uint64_t k = 0; k < digits; ++k) {
    const int v = hex_value(hex[digits - 1 - k]);
    if (v < 0) throw ParseError("invalid hex digit '" + std::string(1, hex[digits - 1 - k]) + "'");
    const std::uint64_t bit = 4 * k;
    if (bit + 4 > table_bits && (static_cast<std::uint64_t>(v) >> (table_bits - bit)) != 0) {
      throw ParseError("hex value has bits beyond 2^n");
    }
    words[bit >> 6] |= static_cast<std::uint64_t>(v) << (bit & 63);
  }
  return f;
}

std::string format_bf(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t digits = (f.size() + 3) / 4;
  std::string hex(digits, '0');
  const auto words = f.words();
  for (std::uint64_t k = 0; k < digits; ++k) {
    const std::uint64_t bit = 4 * k;
    hex[digits - 1 - k] = kDigits[(words[bit >> 6] >> (bit & 63)) & 0xF];
  }
  return "bf:" + std::to_string(f.arity()) + ":" + hex;
}

}  // namespace bentkit
