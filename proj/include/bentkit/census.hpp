#pragma once

#include <bentkit/bf_core.hpp>

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

namespace bentkit {

enum class CensusMethod { naive, degree_restricted };

std::string_view to_string(CensusMethod m);
CensusMethod parse_census_method(std::string_view text);  // "naive" | "degree"

inline constexpr int kNaiveCensusMaxArity = 4;
inline constexpr std::uint64_t kDegreeCensusMaxExponent = 24;

struct CensusOptions {
  unsigned jobs = 1;     // shards, each on its own thread
  bool collect = false;  // keep the bent functions, ascending by truth table
};

struct CensusResult {
  int arity = 0;
  CensusMethod method = CensusMethod::naive;
  std::uint64_t candidates = 0;
  std::uint64_t count = 0;
  std::chrono::nanoseconds elapsed{0};
  std::vector<BooleanFunction> functions;
};

/// Throws DomainError for odd or non-positive n and ResourceError past the
/// method's cap.
void check_census_feasible(int n, CensusMethod method);

/// Every truth table of arity n.
CensusResult enumerate_bent_naive(int n, const CensusOptions& options = {});

/// Largest degree a bent function of even arity n can have: n/2 for n >= 4;
/// at n = 2 every bent function is x1x2 ⊕ affine, degree 2.
int bent_degree_cap(int n);

/// Only tables whose ANF is supported on B_{bent_degree_cap(n)}.
CensusResult enumerate_bent_by_degree(int n, const CensusOptions& options = {});

/// Cached per (n, method).
std::uint64_t bent_count(int n, CensusMethod method);

}  // namespace bentkit
