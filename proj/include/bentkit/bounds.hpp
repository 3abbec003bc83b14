#pragma once

#include <bentkit/numeric.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bentkit {

// Exact counting quantities around N_n, the number of bent functions of n
// variables. Integer-valued exponents are exact; a_n and the bounds that
// contain log2 6 are doubles.
//
// All functions take an even n in [2, 64] (stricter minimums noted) and throw
// DomainError otherwise.

inline constexpr int kBoundsMaxArity = 64;

/// 2^{n-1} + C(n, n/2) / 2: log2 of the number of functions of degree <= n/2.
BigInt trivial_upper_log2(int n);

/// 2^{n-2} + C(n, n/2) / 2.
BigInt tokareva_lower_log2(int n);

/// Σ_{i<=n/2} C(n-2, i). n >= 4.
BigInt t_n_log2(int n);

/// Cosets of the 2-dim face on the two highest coordinates that meet
/// B_{n/2}. n >= 4.
BigInt q_n(int n);

/// 3 · 2^{n-3}. n >= 4.
BigInt simplified_log2(int n);

double a_n_log2(int n);

/// a_n + T_n + Q_n + (3 Q_n / 8) log2 6, i.e. log2(a_n T_n 4^{Q_n/2} 6^{3Q_n/8}).
/// n >= 4.
double theorem_upper_log2(int n);

/// 3 · 2^{n-6} · log2 6 + 2^{n-2}. n >= 6.
double headline_log2(int n);

struct KnownCount {
  int n = 0;
  BigInt count;
  std::string source;
  std::string provenance;  // "external" for user files, "census" when computed here
};

/// [{"n": int, "count": "decimal", "source": "..."}]; provenance "external".
std::vector<KnownCount> parse_known_counts(std::string_view json_text);

struct BoundReport {
  int arity = 0;
  BigInt trivial_upper_log2;
  BigInt tokareva_lower_log2;
  double a_n_log2 = 0;
  std::optional<BigInt> t_n_log2;
  std::optional<BigInt> q_n;
  std::optional<BigInt> simplified_log2;
  std::optional<double> theorem_upper_log2;
  std::optional<double> headline_log2;

  std::optional<BigInt> known_count;
  std::optional<double> known_count_log2;
  std::string known_source;
  std::string known_provenance;

  /// Upper-bound fields whose value at this n is below the known count.
  std::vector<std::string> asymptotic_only;
  /// The Tokareva-conjecture lower bound exceeds the known count.
  bool lower_bound_exceeds_known = false;
  /// theorem_upper_log2 > trivial_upper_log2: the asymptotic bound is
  /// weaker than the degree bound at this n.
  bool theorem_exceeds_trivial = false;
};

/// Uses the first entry of `known` whose n matches, if any.
BoundReport bound_report(int n, std::span<const KnownCount> known = {});

std::string report_to_json(const BoundReport& r);
std::string report_to_table(const BoundReport& r);

}  // namespace bentkit
