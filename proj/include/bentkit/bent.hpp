#pragma once

#include <bentkit/bf_core.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace bentkit {

bool is_bent(const BooleanFunction& f);

/// g with W_b = 2^{n/2} (-1)^g. Throws DomainError("not bent") otherwise.
BooleanFunction dual_bent(const BooleanFunction& b);

/// g(x) = f(M x ⊕ translation) ⊕ <functional, x> ⊕ constant, where row i of
/// M (bit mask over input coordinates) produces output coordinate x_{i+1}.
struct AffineMap {
  int arity = 0;
  std::vector<std::uint64_t> rows;
  std::uint64_t translation = 0;
  std::uint64_t functional = 0;
  bool constant = false;

  static AffineMap identity(int n);

  std::uint64_t apply_linear(std::uint64_t x) const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Rank over F_2 by Gaussian elimination.
int gf2_rank(std::vector<std::uint64_t> rows);

BooleanFunction apply_affine(const BooleanFunction& f, const AffineMap& t);

/// Deterministic in (n, seed). Rejection-samples the matrix until invertible.
AffineMap random_invertible(int n, std::uint64_t seed);

/// log2(|GL(n,2)| · 2^n · 2^{n+1}): invertible matrix, input translation and
/// affine output term.
double affine_group_size_log2(int n);

inline constexpr int kFlatEnumerationMaxArity = 12;

struct FlatSumDistribution {
  int arity = 0;
  std::map<int, std::uint64_t> counts;  // coset sum -> number of 2-flats

  std::uint64_t total() const;
  std::uint64_t count(int sum) const;
};

/// Sum of (-1)^b over every 2-dimensional affine flat t ⊕ span{u, v}. Each
/// flat is visited once, keyed by its minimal point t and its two smallest
/// nonzero differences u < v.
FlatSumDistribution two_flat_sum_distribution(const BooleanFunction& b);

}  // namespace bentkit
