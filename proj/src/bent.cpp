#include <bentkit/bent.hpp>

#include <bentkit/numeric.hpp>
#include <bentkit/transforms.hpp>

#include <random>
#include <string>
#include <utility>

namespace bentkit {
namespace {

std::int32_t bent_magnitude(int n) { return std::int32_t{1} << (n / 2); }

bool spectrum_is_flat(const WalshSpectrum& w) {
  if (w.arity % 2 != 0) return false;
  const std::int32_t mag = bent_magnitude(w.arity);
  for (const auto v : w.values) {
    if (v != mag && v != -mag) return false;
  }
  return true;
}

}  // namespace

bool is_bent(const BooleanFunction& f) {
  if (f.arity() % 2 != 0) return false;
  return spectrum_is_flat(walsh_fast(f));
}

BooleanFunction dual_bent(const BooleanFunction& b) {
  const WalshSpectrum w = walsh_fast(b);
  if (!spectrum_is_flat(w)) throw DomainError("not bent");
  BooleanFunction g(b.arity());
  for (std::uint64_t y = 0; y < w.values.size(); ++y) {
    if (w.values[y] < 0) g.set_bit(y, true);
  }
  return g;
}

AffineMap AffineMap::identity(int n) {
  AffineMap t;
  t.arity = n;
  for (int i = 0; i < n; ++i) t.rows.push_back(std::uint64_t{1} << i);
  return t;
}

std::uint64_t AffineMap::apply_linear(std::uint64_t x) const {
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    y |= static_cast<std::uint64_t>(parity(rows[i] & x)) << i;
  }
  return y;
}

int gf2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 0; bit < 64 && rank < static_cast<int>(rows.size()); ++bit) {
    const std::uint64_t m = std::uint64_t{1} << bit;
    std::size_t pivot = rank;
    while (pivot < rows.size() && (rows[pivot] & m) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && (rows[r] & m)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

BooleanFunction apply_affine(const BooleanFunction& f, const AffineMap& t) {
  const int n = f.arity();
  if (t.arity != n || static_cast<int>(t.rows.size()) != n) {
    throw DomainError("apply_affine: arity mismatch");
  }
  const std::uint64_t limit = f.size();
  if (t.translation >= limit || t.functional >= limit) {
    throw DomainError("apply_affine: vector has bits beyond arity");
  }
  for (auto row : t.rows) {
    if (row >= limit) throw DomainError("apply_affine: matrix row has bits beyond arity");
  }
  if (gf2_rank(t.rows) != n) throw DomainError("apply_affine: singular matrix");

  BooleanFunction g(n);
  for (std::uint64_t x = 0; x < limit; ++x) {
    const bool v = f.bit(t.apply_linear(x) ^ t.translation) ^ (parity(t.functional & x) != 0) ^
                   t.constant;
    if (v) g.set_bit(x, true);
  }
  return g;
}

AffineMap random_invertible(int n, std::uint64_t seed) {
  if (n < 1 || n > 63) throw DomainError("random_invertible: n must be in [1, 63]");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  AffineMap t;
  t.arity = n;
  t.rows.resize(n);
  do {
    for (auto& row : t.rows) row = rng() & mask;
  } while (gf2_rank(t.rows) != n);
  t.translation = rng() & mask;
  t.functional = rng() & mask;
  t.constant = (rng() & 1U) != 0;
  return t;
}

double affine_group_size_log2(int n) {
  if (n < 1) throw DomainError("affine_group_size_log2: n must be >= 1");
  const BigInt size = gl2_order(n) * (BigInt(1) << n) * (BigInt(1) << (n + 1));
  return log2_big(size);
}

std::uint64_t FlatSumDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [sum, c] : counts) t += c;
  return t;
}

std::uint64_t FlatSumDistribution::count(int sum) const {
  const auto it = counts.find(sum);
  return it == counts.end() ? 0 : it->second;
}

FlatSumDistribution two_flat_sum_distribution(const BooleanFunction& b) {
  const int n = b.arity();
  if (n < 2) throw DomainError("two_flat_sum_distribution: n must be >= 2");
  if (n > kFlatEnumerationMaxArity) {
    throw ResourceError("two_flat_sum_distribution: arity " + std::to_string(n) +
                        " exceeds cap " + std::to_string(kFlatEnumerationMaxArity));
  }
  const std::uint64_t size = b.size();
  std::vector<std::int8_t> sign(size);
  for (std::uint64_t x = 0; x < size; ++x) sign[x] = b.bit(x) ? -1 : 1;

  std::int64_t tally[5] = {0, 0, 0, 0, 0};  // sums -4, -2, 0, 2, 4
  for (std::uint64_t u = 1; u < size; ++u) {
    for (std::uint64_t v = u + 1; v < size; ++v) {
      const std::uint64_t w = u ^ v;
      if (w < v) continue;  // u, v must be the two smallest nonzero members
      for (std::uint64_t t = 0; t < size; ++t) {
        if ((t ^ u) < t || (t ^ v) < t || (t ^ w) < t) continue;
        const int s = sign[t] + sign[t ^ u] + sign[t ^ v] + sign[t ^ w];
        ++tally[(s + 4) / 2];
      }
    }
  }
  FlatSumDistribution d{n, {}};
  for (int i = 0; i < 5; ++i) {
    if (tally[i] != 0) d.counts[2 * i - 4] = static_cast<std::uint64_t>(tally[i]);
  }
  return d;
}

}  // namespace bentkit
