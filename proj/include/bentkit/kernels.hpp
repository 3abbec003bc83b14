#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bentkit::kernels {

// In-place butterfly kernels. Stage i (i = 0, 1, ...) pairs index j with
// j | 2^i, matching the x_1 = least-significant-bit convention.
//
//   fwht_*      : (a, b) -> (a + b, a - b) over all log2(len) stages,
//                 len a power of two. Unnormalized.
//   moebius     : XOR-subset butterfly on a bit-packed table of 2^n bits,
//                 t[j | 2^i] ^= t[j]. Involutive.
//   signs_i32   : out[x] = 1 - 2 * bit(x) for the first out.size() bits.
struct KernelSet {
  std::string_view name;
  void (*fwht_i32)(std::int32_t* data, std::size_t len);
  void (*fwht_i64)(std::int64_t* data, std::size_t len);
  void (*moebius)(std::uint64_t* words, int n);
  void (*signs_i32)(const std::uint64_t* words, std::int32_t* out, std::size_t len);
};

const KernelSet& scalar();

/// nullptr when the build lacks the variant or the CPU does not support it.
const KernelSet* avx2();

/// Widest supported set, unless BENTKIT_SIMD=scalar is set in the
/// environment or force_scalar(true) was called.
const KernelSet& active();
void force_scalar(bool on);

/// Every set usable on this machine, scalar first.
std::vector<const KernelSet*> available();

}  // namespace bentkit::kernels
