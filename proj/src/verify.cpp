#include <bentkit/verify.hpp>

#include <bentkit/bent.hpp>
#include <bentkit/census.hpp>
#include <bentkit/geometry.hpp>
#include <bentkit/numeric.hpp>
#include <bentkit/reconstruct.hpp>
#include <bentkit/transforms.hpp>

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace bentkit {
namespace {

class Checker {
 public:
  Checker(std::string suite, int arity) { result_.suite = std::move(suite); result_.arity = arity; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }
  void detail(const std::string& key, const std::string& value) { result_.details[key] = value; }
  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> words(word_count(n));
  for (auto& w : words) w = rng();
  if (n < 6) words[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  return BooleanFunction::from_words(n, std::move(words));
}

int random_arity(int lo, int hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::uint64_t random_mask(int n, std::mt19937_64& rng) {
  return rng() & ((std::uint64_t{1} << n) - 1);
}

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<BooleanFunction> all_functions(int n) {
  std::vector<BooleanFunction> out;
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) out.push_back(BooleanFunction::from_words(n, {t}));
  return out;
}

std::vector<BooleanFunction> bent_pool(int n, unsigned jobs) {
  if (n <= kNaiveCensusMaxArity) {
    return enumerate_bent_by_degree(n, CensusOptions{jobs, true}).functions;
  }
  // x1x2 ⊕ x3x4 ⊕ ... seeds the pool past census range.
  BooleanFunction f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    int v = 0;
    for (int i = 0; i + 1 < n; i += 2) v ^= static_cast<int>((x >> i) & (x >> (i + 1)) & 1U);
    f.set_bit(x, v != 0);
  }
  return {f};
}

SuiteResult suite_lemma1(const SuiteOptions& o) {
  const int n = o.n ? o.n : 3;
  Checker c("lemma1", n);
  std::uint64_t premises = 0;
  auto run = [&](const BooleanFunction& f, const BooleanFunction& g, const FaceMask& gamma) {
    const Lemma1Report r = check_lemma1(f, g, gamma);
    premises += r.premise;
    c.check(r.holds(), [&] {
      return "f=" + format_bf(f) + " g=" + format_bf(g) + " mask=" + hex(gamma.mask());
    });
  };
  if (n <= 3) {
    const auto fs = all_functions(n);
    for (int i = 0; i < n; ++i) {
      const FaceMask gamma(n, std::uint64_t{1} << i);
      for (const auto& f : fs) {
        for (const auto& g : fs) run(f, g, gamma);
      }
    }
    c.detail("mode", "exhaustive, all pairs, all dimension-1 faces");
  } else {
    check_arity(n);
    std::mt19937_64 rng(o.seed);
    for (std::uint64_t s = 0; s < o.samples; ++s) {
      const FaceMask gamma(n, random_mask(n, rng));
      const BooleanFunction f = random_function(n, rng);
      BooleanFunction g = random_function(n, rng);
      if (s % 2 == 1) {
        // Shifting by a ∈ Γ⊥ keeps W on Γ, so the premise is exercised.
        const std::uint64_t a = random_mask(n, rng) & dual_face(gamma).mask();
        for (std::uint64_t x = 0; x < f.size(); ++x) g.set_bit(x, f.bit(x ^ a));
      }
      run(f, g, gamma);
    }
    c.detail("mode", "random triples");
  }
  c.detail("premise_true", std::to_string(premises));
  return c.finish();
}

SuiteResult suite_lemma2(const SuiteOptions& o) {
  const int n = o.n ? o.n : 4;
  Checker c("lemma2", n);
  auto round_trip = [&](const BooleanFunction& f, int r) {
    const BallAssignment a = restrict_to_ball(f, r);
    c.check(reconstruct_from_ball(a) == f, [&] { return "f=" + format_bf(f) + " r=" + std::to_string(r); });
    return a;
  };
  if (n <= 4) {
    check_arity(n);
    for (int r = 0; r <= n; ++r) {
      const Ball ball = ball_points(n, r);
      const std::uint64_t space = std::uint64_t{1} << ball.members.size();
      std::set<std::vector<std::uint8_t>> restrictions;
      for (std::uint64_t code = 0; code < space; ++code) {
        BooleanFunction anf(n);
        for (std::size_t i = 0; i < ball.members.size(); ++i) {
          if ((code >> i) & 1U) anf.set_bit(ball.members[i], true);
        }
        restrictions.insert(round_trip(moebius(anf), r).values);
      }
      c.check(restrictions.size() == space, [&] {
        return "restrictions to B_" + std::to_string(r) + " not distinct";
      });
    }
    c.detail("mode", "exhaustive over every radius");
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::uint64_t s = 0; s < o.samples; ++s) {
      const int r = random_arity(0, n, rng);
      BooleanFunction anf = random_function(n, rng);
      for (std::uint64_t y = 0; y < anf.size(); ++y) {
        if (popcount(y) > r) anf.set_bit(y, false);
      }
      round_trip(moebius(anf), r);
    }
    c.detail("mode", "random ANF supported on B_r");
  }
  return c.finish();
}

SuiteResult suite_prop1(const SuiteOptions& o) {
  const int n = o.n ? o.n : 4;
  if (n % 2 != 0) throw DomainError("prop1 suite needs an even arity");
  Checker c("prop1", n);
  const auto pool = bent_pool(n, o.jobs);
  std::mt19937_64 rng(o.seed);
  for (const auto& f : pool) {
    for (std::uint64_t s = 0; s < o.samples; ++s) {
      const AffineMap t = random_invertible(n, rng());
      c.check(is_bent(apply_affine(f, t)), [&] { return "f=" + format_bf(f) + " image not bent"; });
    }
  }
  c.detail("bent_functions", std::to_string(pool.size()));
  c.detail("maps_per_function", std::to_string(o.samples));
  return c.finish();
}

SuiteResult suite_convolution(const SuiteOptions& o) {
  const int max_n = o.n ? o.n : 10;
  Checker c("convolution", max_n);
  for (const auto& f : all_functions(2)) {
    for (std::uint64_t m = 0; m < 4; ++m) {
      c.check(check_restriction_identity(f, FaceMask(2, m)),
              [&] { return "f=" + format_bf(f) + " mask=" + hex(m); });
    }
  }
  std::mt19937_64 rng(o.seed);
  for (std::uint64_t s = 0; s < o.samples; ++s) {
    const int n = random_arity(1, max_n, rng);
    const BooleanFunction f = random_function(n, rng);
    const FaceMask gamma(n, random_mask(n, rng));
    c.check(check_restriction_identity(f, gamma),
            [&] { return "f=" + format_bf(f) + " mask=" + hex(gamma.mask()); });
  }
  c.detail("mode", "exhaustive n=2 plus random n<=" + std::to_string(max_n));
  return c.finish();
}

void spectral_checks(Checker& c, const BooleanFunction& f, bool compare_naive) {
  const int n = f.arity();
  const WalshSpectrum w = walsh_fast(f);
  std::int64_t energy = 0;
  for (auto v : w.values) energy += static_cast<std::int64_t>(v) * v;
  c.check(energy == (std::int64_t{1} << (2 * n)), [&] { return "Parseval fails for " + format_bf(f); });
  c.check(w.values[0] == static_cast<std::int64_t>(f.size()) - 2 * static_cast<std::int64_t>(weight(f)),
          [&] { return "W(0) != 2^n - 2wt for " + format_bf(f); });
  const IntegerVector twice = fourier(fourier(sign_vector(f)));
  const IntegerVector signs = sign_vector(f);
  bool inverse = true;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    inverse = inverse && twice.values[x] == (static_cast<std::int64_t>(f.size()) * signs.values[x]);
  }
  c.check(inverse, [&] { return "double transform != 2^n (-1)^f for " + format_bf(f); });
  if (compare_naive) {
    c.check(walsh_naive(f) == w, [&] { return "fast != naive for " + format_bf(f); });
  }
}

SuiteResult suite_parseval(const SuiteOptions& o) {
  const int max_n = o.n ? o.n : 12;
  Checker c("parseval", max_n);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : all_functions(n)) spectral_checks(c, f, true);
  }
  std::mt19937_64 rng(o.seed);
  for (std::uint64_t s = 0; s < o.samples; ++s) {
    const int n = random_arity(1, max_n, rng);
    spectral_checks(c, random_function(n, rng), n <= 10);
  }
  c.detail("mode", "exhaustive n<=3 plus random n<=" + std::to_string(max_n) +
                       " (naive comparison for n<=10)");
  return c.finish();
}

SuiteResult suite_involution(const SuiteOptions& o) {
  const int max_n = o.n ? o.n : 16;
  Checker c("involution", max_n);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& f : all_functions(n)) {
      c.check(moebius(moebius(f)) == f, [&] { return "M[M[f]] != f for " + format_bf(f); });
    }
  }
  std::mt19937_64 rng(o.seed);
  for (std::uint64_t s = 0; s < o.samples; ++s) {
    const BooleanFunction f = random_function(random_arity(1, max_n, rng), rng);
    c.check(moebius(moebius(f)) == f, [&] { return "M[M[f]] != f for " + format_bf(f); });
  }
  std::uint64_t duals = 0;
  for (const auto& b : bent_pool(4, o.jobs)) {
    const BooleanFunction g = dual_bent(b);
    c.check(is_bent(g) && dual_bent(g) == b, [&] { return "dual involution fails for " + format_bf(b); });
    ++duals;
  }
  c.detail("bent_duals_checked", std::to_string(duals));
  return c.finish();
}

SuiteResult suite_flats(const SuiteOptions& o) {
  const int n = o.n ? o.n : 4;
  if (n != 2 && n != 4) throw DomainError("flats suite runs at n = 2 or n = 4");
  Checker c("flats", n);
  const std::map<int, std::uint64_t> expected{{-4, 1}, {-2, 4}, {0, 6}, {2, 4}, {4, 1}};
  c.check(sum_pattern_multiplicities(2) == expected, [] { return "2-dim sum classes != {1,4,6,4,1}"; });

  const std::uint64_t total = (gaussian_binomial2(n, 2) << (n - 2)).convert_to<std::uint64_t>();
  std::set<std::uint64_t> pm2;
  for (const auto& b : bent_pool(n, o.jobs)) {
    const FlatSumDistribution d = two_flat_sum_distribution(b);
    const std::uint64_t k = d.count(-2) + d.count(2);
    pm2.insert(k);
    c.check(d.total() == total, [&] { return "flat total mismatch for " + format_bf(b); });
    if (n == 4) c.check(k == 80, [&] { return format_bf(b) + " has " + std::to_string(k) + " flats with sum +-2"; });
  }
  c.check(pm2.size() == 1, [] { return "+-2 flat count varies across bent functions"; });
  c.detail("flats_total", std::to_string(total));
  if (pm2.size() == 1) c.detail("flats_sum_pm2", std::to_string(*pm2.begin()));
  return c.finish();
}

SuiteResult suite_census_agreement(const SuiteOptions& o) {
  Checker c("census-agreement", 4);
  for (int n : {2, 4}) {
    const CensusResult naive = enumerate_bent_naive(n, {o.jobs, true});
    const CensusResult degree = enumerate_bent_by_degree(n, {o.jobs, true});
    c.check(naive.count == degree.count && naive.functions == degree.functions,
            [&] { return "methods disagree at n=" + std::to_string(n); });
    for (unsigned shards : {1U, 4U, 16U}) {
      const CensusResult s = enumerate_bent_naive(n, {shards, true});
      c.check(s.functions == naive.functions,
              [&] { return "shard count " + std::to_string(shards) + " changes output"; });
    }
    c.detail("N_" + std::to_string(n), std::to_string(naive.count));
  }
  // Bent functions on F^2 are exactly the odd-weight tables.
  std::uint64_t odd = 0;
  for (std::uint64_t t = 0; t < 16; ++t) odd += popcount(t) % 2;
  c.check(bent_count(2, CensusMethod::naive) == odd, [] { return "N_2 != #odd-weight tables"; });
  return c.finish();
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "lemma1", "lemma2", "prop1", "convolution", "parseval", "involution", "flats", "census-agreement"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "lemma1") return suite_lemma1(options);
  if (name == "lemma2") return suite_lemma2(options);
  if (name == "prop1") return suite_prop1(options);
  if (name == "convolution") return suite_convolution(options);
  if (name == "parseval") return suite_parseval(options);
  if (name == "involution") return suite_involution(options);
  if (name == "flats") return suite_flats(options);
  if (name == "census-agreement") return suite_census_agreement(options);
  throw DomainError("unknown verify suite '" + std::string(name) + "'");
}

std::string suite_to_json(const SuiteResult& r) {
  nlohmann::json doc = {{"suite", r.suite},       {"n", r.arity},
                        {"checked", r.checked},   {"failures", r.failures},
                        {"passed", r.passed()},   {"details", r.details}};
  if (!r.first_failure.empty()) doc["first_failure"] = r.first_failure;
  return doc.dump();
}

}  // namespace bentkit
