#pragma once

#include <bentkit/kernels.hpp>

#include <cstdint>

namespace bentkit::kernels::detail {

// Bits whose in-word index has bit i clear.
inline constexpr std::uint64_t kLowHalfMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};

void fwht_i32_scalar(std::int32_t* data, std::size_t len);
void fwht_i64_scalar(std::int64_t* data, std::size_t len);
void moebius_in_word(std::uint64_t* words, std::size_t nwords, int stages);
void moebius_scalar(std::uint64_t* words, int n);
void signs_i32_scalar(const std::uint64_t* words, std::int32_t* out, std::size_t len);

#if defined(BENTKIT_HAVE_AVX2)
const KernelSet& avx2_set();
#endif

}  // namespace bentkit::kernels::detail
