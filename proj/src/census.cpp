#include <bentkit/census.hpp>

#include <bentkit/bent.hpp>
#include <bentkit/geometry.hpp>
#include <bentkit/kernels.hpp>
#include <bentkit/transforms.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

namespace bentkit {
namespace {

struct Shard {
  std::uint64_t count = 0;
  std::vector<BooleanFunction> functions;
};

// Splits [0, candidates) into `jobs` contiguous ranges and runs `decode` +
// is_bent over each on its own thread. Shard outputs are merged in range
// order.
template <typename Decode>
CensusResult run_sharded(int n, CensusMethod method, std::uint64_t candidates,
                         const CensusOptions& options, Decode decode) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t jobs = std::clamp<std::uint64_t>(options.jobs, 1, candidates);
  std::vector<Shard> shards(jobs);

  auto work = [&](std::uint64_t s) {
    const std::uint64_t lo = candidates * s / jobs;
    const std::uint64_t hi = candidates * (s + 1) / jobs;
    Shard& out = shards[s];
    for (std::uint64_t c = lo; c < hi; ++c) {
      BooleanFunction f = decode(c);
      if (!is_bent(f)) continue;
      ++out.count;
      if (options.collect) out.functions.push_back(std::move(f));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (std::uint64_t s = 0; s < jobs; ++s) threads.emplace_back(work, s);
  }

  CensusResult result;
  result.arity = n;
  result.method = method;
  result.candidates = candidates;
  for (auto& shard : shards) {
    result.count += shard.count;
    for (auto& f : shard.functions) result.functions.push_back(std::move(f));
  }
  std::sort(result.functions.begin(), result.functions.end(), table_less);
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace

int bent_degree_cap(int n) { return n == 2 ? 2 : n / 2; }

std::string_view to_string(CensusMethod m) {
  return m == CensusMethod::naive ? "naive" : "degree";
}

CensusMethod parse_census_method(std::string_view text) {
  if (text == "naive") return CensusMethod::naive;
  if (text == "degree" || text == "degree-restricted") return CensusMethod::degree_restricted;
  throw DomainError("unknown census method '" + std::string(text) + "'");
}

void check_census_feasible(int n, CensusMethod method) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("census needs an even arity >= 2, got " + std::to_string(n));
  }
  if (method == CensusMethod::naive) {
    if (n > kNaiveCensusMaxArity) {
      throw ResourceError("naive census capped at n <= " + std::to_string(kNaiveCensusMaxArity) +
                          " (2^(2^n) candidates)");
    }
    return;
  }
  const std::uint64_t exponent = degree_space_log2(n, bent_degree_cap(n));
  if (exponent > kDegreeCensusMaxExponent) {
    throw ResourceError("degree-restricted census capped at 2^" +
                        std::to_string(kDegreeCensusMaxExponent) + " candidates; n=" +
                        std::to_string(n) + " needs 2^" + std::to_string(exponent));
  }
}

CensusResult enumerate_bent_naive(int n, const CensusOptions& options) {
  check_census_feasible(n, CensusMethod::naive);
  const std::uint64_t candidates = std::uint64_t{1} << (std::uint64_t{1} << n);
  return run_sharded(n, CensusMethod::naive, candidates, options, [n](std::uint64_t c) {
    return BooleanFunction::from_words(n, {c});
  });
}

CensusResult enumerate_bent_by_degree(int n, const CensusOptions& options) {
  check_census_feasible(n, CensusMethod::degree_restricted);
  const Ball ball = ball_points(n, bent_degree_cap(n));
  const std::uint64_t candidates = std::uint64_t{1} << ball.members.size();
  return run_sharded(n, CensusMethod::degree_restricted, candidates, options,
                     [n, &ball](std::uint64_t c) {
                       BooleanFunction anf(n);
                       for (std::size_t i = 0; i < ball.members.size(); ++i) {
                         if ((c >> i) & 1U) anf.set_bit(ball.members[i], true);
                       }
                       return moebius(anf);
                     });
}

std::uint64_t bent_count(int n, CensusMethod method) {
  static std::mutex mu;
  static std::map<std::pair<int, CensusMethod>, std::uint64_t> cache;
  check_census_feasible(n, method);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({n, method}); it != cache.end()) return it->second;
  }
  const CensusResult r = method == CensusMethod::naive ? enumerate_bent_naive(n)
                                                       : enumerate_bent_by_degree(n);
  std::lock_guard lock(mu);
  cache[{n, method}] = r.count;
  return r.count;
}

}  // namespace bentkit
