#include "kernels_impl.hpp"

namespace bentkit::kernels::detail {

void fwht_i32_scalar(std::int32_t* data, std::size_t len) {
  for (std::size_t h = 1; h < len; h *= 2) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t a = data[j];
        const std::int32_t b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

void fwht_i64_scalar(std::int64_t* data, std::size_t len) {
  for (std::size_t h = 1; h < len; h *= 2) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = data[j];
        const std::int64_t b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

void moebius_in_word(std::uint64_t* words, std::size_t nwords, int stages) {
  for (int i = 0; i < stages; ++i) {
    const std::uint64_t low = kLowHalfMask[i];
    const unsigned shift = 1U << i;
    for (std::size_t w = 0; w < nwords; ++w) words[w] ^= (words[w] & low) << shift;
  }
}

void moebius_scalar(std::uint64_t* words, int n) {
  const std::size_t nwords = n >= 6 ? std::size_t{1} << (n - 6) : 1;
  moebius_in_word(words, nwords, n < 6 ? n : 6);
  for (std::size_t h = 1; h < nwords; h *= 2) {
    for (std::size_t i = 0; i < nwords; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) words[j + h] ^= words[j];
    }
  }
}

void signs_i32_scalar(const std::uint64_t* words, std::int32_t* out, std::size_t len) {
  for (std::size_t x = 0; x < len; ++x) {
    out[x] = 1 - 2 * static_cast<std::int32_t>((words[x >> 6] >> (x & 63)) & 1U);
  }
}

}  // namespace bentkit::kernels::detail

namespace bentkit::kernels {

const KernelSet& scalar() {
  static const KernelSet set{"scalar", detail::fwht_i32_scalar, detail::fwht_i64_scalar,
                             detail::moebius_scalar, detail::signs_i32_scalar};
  return set;
}

}  // namespace bentkit::kernels
