// Compiled with -mavx2; only reached after a runtime CPU check.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace bentkit::kernels::detail {
namespace {

// Stages h = 1, 2, 4 inside one 8-lane vector. `s` holds each lane's partner;
// lanes with the stage bit clear take v + s, the others s - v.
inline __m256i fwht8_i32(__m256i v) {
  __m256i s = _mm256_shuffle_epi32(v, 0xB1);
  v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xAA);
  s = _mm256_shuffle_epi32(v, 0x4E);
  v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xCC);
  s = _mm256_permute2x128_si256(v, v, 0x01);
  v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xF0);
  return v;
}

inline __m256i fwht4_i64(__m256i v) {
  __m256i s = _mm256_shuffle_epi32(v, 0x4E);
  v = _mm256_blend_epi32(_mm256_add_epi64(v, s), _mm256_sub_epi64(s, v), 0xCC);
  s = _mm256_permute2x128_si256(v, v, 0x01);
  v = _mm256_blend_epi32(_mm256_add_epi64(v, s), _mm256_sub_epi64(s, v), 0xF0);
  return v;
}

void fwht_i32_avx2(std::int32_t* data, std::size_t len) {
  if (len < 8) {
    fwht_i32_scalar(data, len);
    return;
  }
  for (std::size_t i = 0; i < len; i += 8) {
    auto* p = reinterpret_cast<__m256i*>(data + i);
    _mm256_storeu_si256(p, fwht8_i32(_mm256_loadu_si256(p)));
  }
  for (std::size_t h = 8; h < len; h *= 2) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; j += 8) {
        auto* pa = reinterpret_cast<__m256i*>(data + j);
        auto* pb = reinterpret_cast<__m256i*>(data + j + h);
        const __m256i a = _mm256_loadu_si256(pa);
        const __m256i b = _mm256_loadu_si256(pb);
        _mm256_storeu_si256(pa, _mm256_add_epi32(a, b));
        _mm256_storeu_si256(pb, _mm256_sub_epi32(a, b));
      }
    }
  }
}

void fwht_i64_avx2(std::int64_t* data, std::size_t len) {
  if (len < 4) {
    fwht_i64_scalar(data, len);
    return;
  }
  for (std::size_t i = 0; i < len; i += 4) {
    auto* p = reinterpret_cast<__m256i*>(data + i);
    _mm256_storeu_si256(p, fwht4_i64(_mm256_loadu_si256(p)));
  }
  for (std::size_t h = 4; h < len; h *= 2) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; j += 4) {
        auto* pa = reinterpret_cast<__m256i*>(data + j);
        auto* pb = reinterpret_cast<__m256i*>(data + j + h);
        const __m256i a = _mm256_loadu_si256(pa);
        const __m256i b = _mm256_loadu_si256(pb);
        _mm256_storeu_si256(pa, _mm256_add_epi64(a, b));
        _mm256_storeu_si256(pb, _mm256_sub_epi64(a, b));
      }
    }
  }
}

void moebius_avx2(std::uint64_t* words, int n) {
  const std::size_t nwords = n >= 6 ? std::size_t{1} << (n - 6) : 1;
  if (nwords < 4) {
    moebius_scalar(words, n);
    return;
  }
  for (std::size_t w = 0; w < nwords; w += 4) {
    auto* p = reinterpret_cast<__m256i*>(words + w);
    __m256i v = _mm256_loadu_si256(p);
    for (int i = 0; i < 6; ++i) {
      const __m256i low = _mm256_set1_epi64x(static_cast<long long>(kLowHalfMask[i]));
      v = _mm256_xor_si256(v, _mm256_slli_epi64(_mm256_and_si256(v, low), 1 << i));
    }
    // Word strides 1 and 2: lanes {1,3} take lanes {0,2}, then lanes {2,3}
    // take lanes {0,1}.
    const __m256i odd = _mm256_set_epi64x(-1, 0, -1, 0);
    v = _mm256_xor_si256(v, _mm256_and_si256(_mm256_permute4x64_epi64(v, 0xA0), odd));
    const __m256i high = _mm256_set_epi64x(-1, -1, 0, 0);
    v = _mm256_xor_si256(v, _mm256_and_si256(_mm256_permute4x64_epi64(v, 0x44), high));
    _mm256_storeu_si256(p, v);
  }
  for (std::size_t h = 4; h < nwords; h *= 2) {
    for (std::size_t i = 0; i < nwords; i += 2 * h) {
      for (std::size_t j = i; j < i + h; j += 4) {
        auto* pa = reinterpret_cast<const __m256i*>(words + j);
        auto* pb = reinterpret_cast<__m256i*>(words + j + h);
        _mm256_storeu_si256(pb, _mm256_xor_si256(_mm256_loadu_si256(pb), _mm256_loadu_si256(pa)));
      }
    }
  }
}

void signs_i32_avx2(const std::uint64_t* words, std::int32_t* out, std::size_t len) {
  if (len < 8) {
    signs_i32_scalar(words, out, len);
    return;
  }
  const __m256i lane_bits = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);
  const __m256i one = _mm256_set1_epi32(1);
  for (std::size_t x = 0; x < len; x += 8) {
    const auto byte = static_cast<int>((words[x >> 6] >> (x & 63)) & 0xFF);
    const __m256i b = _mm256_and_si256(_mm256_set1_epi32(byte), lane_bits);
    const __m256i set = _mm256_cmpeq_epi32(b, lane_bits);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), _mm256_or_si256(set, one));
  }
}

}  // namespace

const KernelSet& avx2_set() {
  static const KernelSet set{"avx2", fwht_i32_avx2, fwht_i64_avx2, moebius_avx2, signs_i32_avx2};
  return set;
}

}  // namespace bentkit::kernels::detail
