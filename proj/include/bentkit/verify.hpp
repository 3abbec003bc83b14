#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bentkit {

// Self-checking suites over the library's identities. Each suite runs an
// exhaustive part at small arity and/or a seeded random part, and counts
// counterexamples.

struct SuiteOptions {
  int n = 0;  // 0 selects the suite's default arity
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct SuiteResult {
  std::string suite;
  int arity = 0;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  std::map<std::string, std::string> details;

  bool passed() const { return failures == 0; }
};

const std::vector<std::string_view>& suite_names();

/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

std::string suite_to_json(const SuiteResult& r);

}  // namespace bentkit
