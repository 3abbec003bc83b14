#include <bentkit/transforms.hpp>

#include <bentkit/kernels.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace bentkit {

WalshSpectrum walsh_fast(const BooleanFunction& f) {
  check_arity(f.arity());
  const auto& k = kernels::active();
  WalshSpectrum w{f.arity(), std::vector<std::int32_t>(f.size())};
  k.signs_i32(f.words().data(), w.values.data(), w.values.size());
  k.fwht_i32(w.values.data(), w.values.size());
  return w;
}

WalshSpectrum walsh_naive(const BooleanFunction& f) {
  if (f.arity() > kNaiveWalshMaxArity) {
    throw ResourceError("walsh_naive: arity " + std::to_string(f.arity()) + " exceeds cap " +
                        std::to_string(kNaiveWalshMaxArity));
  }
  const std::uint64_t size = f.size();
  WalshSpectrum w{f.arity(), std::vector<std::int32_t>(size)};
  for (std::uint64_t y = 0; y < size; ++y) {
    std::int32_t acc = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
      acc += ((f.bit(x) ? 1 : 0) ^ parity(x & y)) ? -1 : 1;
    }
    w.values[y] = acc;
  }
  return w;
}

IntegerVector sign_vector(const BooleanFunction& f) {
  IntegerVector v{f.arity(), std::vector<std::int64_t>(f.size())};
  for (std::uint64_t x = 0; x < f.size(); ++x) v.values[x] = f.bit(x) ? -1 : 1;
  return v;
}

IntegerVector fourier(const IntegerVector& g) {
  if (g.values.size() != (std::size_t{1} << g.arity)) {
    throw DomainError("fourier: vector length must be 2^arity");
  }
  IntegerVector out = g;
  kernels::active().fwht_i64(out.values.data(), out.values.size());
  return out;
}

BooleanFunction moebius(const BooleanFunction& f) {
  BooleanFunction out = f;
  kernels::active().moebius(out.mutable_words().data(), f.arity());
  return out;
}

std::vector<std::uint8_t> moebius(std::span<const std::uint8_t> table) {
  if (table.size() < 2 || !std::has_single_bit(table.size())) {
    throw DomainError("moebius: table length must be 2^n with n >= 1, got " +
                      std::to_string(table.size()));
  }
  const int n = std::countr_zero(table.size());
  const BooleanFunction m = moebius(make_function(n, table));
  std::vector<std::uint8_t> out(table.size());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = m.bit(i) ? 1 : 0;
  return out;
}

int degree(const BooleanFunction& f) {
  const BooleanFunction anf = moebius(f);
  const auto words = anf.words();
  int best = 0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
      const std::uint64_t y = (static_cast<std::uint64_t>(w) << 6) | std::countr_zero(bits);
      best = std::max(best, popcount(y));
    }
  }
  return best;
}

std::uint64_t degree_space_log2(int n, int d) {
  if (n < 0 || n > 62) throw DomainError("degree_space_log2: n must be in [0, 62]");
  if (d < 0 || d > n) throw DomainError("degree_space_log2: d must be in [0, n]");
  std::uint64_t sum = 0;
  std::uint64_t c = 1;
  for (int i = 0; i <= d; ++i) {
    sum += c;
    c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * (n - i) / (i + 1));
  }
  return sum;
}

IntegerVector convolve_pm(const BooleanFunction& f, const IntegerVector& g) {
  if (f.arity() != g.arity || g.values.size() != f.size()) {
    throw DomainError("convolve_pm: arity mismatch");
  }
  IntegerVector out{f.arity(), std::vector<std::int64_t>(f.size(), 0)};
  for (std::uint64_t w = 0; w < g.values.size(); ++w) {
    const std::int64_t gw = g.values[w];
    if (gw == 0) continue;
    for (std::uint64_t z = 0; z < out.values.size(); ++z) {
      out.values[z] += f.bit(z ^ w) ? -gw : gw;
    }
  }
  return out;
}

bool check_restriction_identity(const BooleanFunction& f, const FaceMask& gamma) {
  if (f.arity() != gamma.arity()) throw DomainError("check_restriction_identity: arity mismatch");
  const int n = f.arity();
  const FaceMask perp = dual_face(gamma);

  IntegerVector indicator_perp{n, std::vector<std::int64_t>(f.size(), 0)};
  for_each_submask(perp.mask(), [&](std::uint64_t x) { indicator_perp.values[x] = 1; });
  const IntegerVector lhs = convolve_pm(f, indicator_perp);

  IntegerVector spectrum = fourier(sign_vector(f));
  for (std::uint64_t y = 0; y < spectrum.values.size(); ++y) {
    if (!gamma.contains(y)) spectrum.values[y] = 0;
  }
  const IntegerVector scaled = fourier(spectrum);
  const int shift = gamma.dimension();
  const std::int64_t divisor = std::int64_t{1} << shift;
  for (std::uint64_t z = 0; z < scaled.values.size(); ++z) {
    if (scaled.values[z] % divisor != 0) return false;
    if (scaled.values[z] / divisor != lhs.values[z]) return false;
  }
  return true;
}

}  // namespace bentkit
