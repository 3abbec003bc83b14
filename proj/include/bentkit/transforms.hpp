#pragma once

#include <bentkit/bf_core.hpp>
#include <bentkit/geometry.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace bentkit {

/// values[index(y)] = W_f(y) = Σ_x (-1)^{f(x) ⊕ <x,y>}.
struct WalshSpectrum {
  int arity = 0;
  std::vector<std::int32_t> values;
  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// Real-valued function on F^n, indexed like a truth table.
struct IntegerVector {
  int arity = 0;
  std::vector<std::int64_t> values;
  friend bool operator==(const IntegerVector&, const IntegerVector&) = default;
};

inline constexpr int kNaiveWalshMaxArity = 12;

/// O(n 2^n) butterfly.
WalshSpectrum walsh_fast(const BooleanFunction& f);

/// Direct double sum, O(4^n); arity capped at kNaiveWalshMaxArity.
WalshSpectrum walsh_naive(const BooleanFunction& f);

/// (-1)^{f(x)} as an integer vector.
IntegerVector sign_vector(const BooleanFunction& f);

/// ĝ(y) = Σ_x g(x) (-1)^{<x,y>}. Applying it twice multiplies by 2^n.
IntegerVector fourier(const IntegerVector& g);

/// ANF coefficient table M[f](y) = ⊕_{x ⊆ y} f(x).
BooleanFunction moebius(const BooleanFunction& f);

/// Same transform on an unpacked 0/1 table whose length must be 2^n, n >= 1.
std::vector<std::uint8_t> moebius(std::span<const std::uint8_t> table);

/// Largest monomial weight in the ANF; 0 for constants.
int degree(const BooleanFunction& f);

/// log2 of the number of functions of degree <= d: Σ_{i<=d} C(n, i).
std::uint64_t degree_space_log2(int n, int d);

/// out[z] = Σ_x (-1)^{f(x)} g[z ⊕ x], evaluated from the definition over the
/// support of g.
IntegerVector convolve_pm(const BooleanFunction& f, const IntegerVector& g);

/// Exact check of (-1)^f * 1_{Γ⊥} = 2^{-dim Γ} · FT(FT((-1)^f) · 1_Γ).
bool check_restriction_identity(const BooleanFunction& f, const FaceMask& gamma);

}  // namespace bentkit
