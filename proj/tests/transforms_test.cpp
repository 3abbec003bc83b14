#include <bentkit/transforms.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

using namespace bentkit;
using bentkit::oracle::random_function;

namespace {

std::vector<std::int32_t> values(std::initializer_list<std::int32_t> v) { return v; }

}  // namespace

TEST(WalshFast, Examples) {
  EXPECT_EQ(walsh_fast(BooleanFunction::constant(2, false)).values, values({4, 0, 0, 0}));
  EXPECT_EQ(walsh_fast(parse_bf("bf:2:8")).values, values({2, 2, 2, -2}));
  EXPECT_EQ(walsh_fast(parse_bf("bf:2:a")).values, values({0, 4, 0, 0}));
}

TEST(WalshNaive, Examples) {
  EXPECT_EQ(walsh_naive(parse_bf("bf:2:8")).values, values({2, 2, 2, -2}));
  EXPECT_EQ(walsh_naive(BooleanFunction::constant(1, true)).values, values({-2, 0}));
  EXPECT_THROW(walsh_naive(BooleanFunction(13)), ResourceError);
}

TEST(WalshFast, MatchesOracleExhaustivelyToN3) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1U << n)); ++t) {
      const auto f = bentkit::oracle::from_table(n, t);
      const auto w = walsh_fast(f);
      const auto oracle = bentkit::oracle::walsh_oracle(f);
      ASSERT_EQ(w.values.size(), oracle.size());
      for (std::size_t y = 0; y < oracle.size(); ++y) ASSERT_EQ(w.values[y], oracle[y]);
      ASSERT_EQ(walsh_naive(f), w);
    }
  }
}

TEST(WalshFast, MatchesNaiveRandomly) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_function(10, rng);
    ASSERT_EQ(walsh_fast(f), walsh_naive(f));
  }
  for (int n = 4; n <= 10; ++n) {
    const auto f = random_function(n, rng);
    ASSERT_EQ(walsh_fast(f), walsh_naive(f)) << n;
  }
}

TEST(WalshFast, ParsevalAndValueAtZero) {
  std::mt19937_64 rng(8);
  for (std::uint64_t t = 0; t < 16; ++t) {
    std::int64_t e = 0;
    for (auto v : walsh_fast(bentkit::oracle::from_table(2, t)).values) e += v * v;
    EXPECT_EQ(e, 16);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto f = random_function(n, rng);
    const auto w = walsh_fast(f);
    std::int64_t e = 0;
    for (auto v : w.values) {
      e += static_cast<std::int64_t>(v) * v;
      ASSERT_EQ((v - (std::int64_t{1} << n)) % 2, 0) << "parity invariant";
    }
    EXPECT_EQ(e, std::int64_t{1} << (2 * n));
    EXPECT_EQ(w.values[0], (std::int64_t{1} << n) - 2 * static_cast<std::int64_t>(weight(f)));
  }
}

TEST(Fourier, DoubleTransformScalesBy2n) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 12; ++n) {
    const auto f = random_function(n, rng);
    const auto s = sign_vector(f);
    const auto twice = fourier(fourier(s));
    for (std::size_t x = 0; x < s.values.size(); ++x) {
      ASSERT_EQ(twice.values[x], s.values[x] << n);
    }
  }
  EXPECT_THROW(fourier(IntegerVector{3, {1, 2}}), DomainError);
}

TEST(WalshFast, LargeArityIsFast) {
  std::mt19937_64 rng(10);
  const auto f = random_function(20, rng);
  const auto start = std::chrono::steady_clock::now();
  const auto w = walsh_fast(f);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 1.0);
  EXPECT_EQ(w.values[0], (1 << 20) - 2 * static_cast<std::int64_t>(weight(f)));
}

TEST(Moebius, Examples) {
  const auto anf_and = moebius(parse_bf("bf:2:8"));
  EXPECT_EQ(format_bf(anf_and), "bf:2:8");  // single monomial x1x2
  EXPECT_EQ(format_bf(moebius(BooleanFunction::constant(2, true))), "bf:2:1");
  EXPECT_EQ(moebius(BooleanFunction::constant(3, false)), BooleanFunction::constant(3, false));
}

TEST(Moebius, ByteTableOverload) {
  const std::vector<std::uint8_t> and_table{0, 0, 0, 1};
  EXPECT_EQ(moebius(and_table), and_table);
  const std::vector<std::uint8_t> ones{1, 1, 1, 1};
  EXPECT_EQ(moebius(ones), (std::vector<std::uint8_t>{1, 0, 0, 0}));
  EXPECT_THROW(moebius(std::vector<std::uint8_t>{1, 0, 1}), DomainError);
  EXPECT_THROW(moebius(std::vector<std::uint8_t>{1}), DomainError);
}

TEST(Moebius, MatchesFaceXorOracle) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 9; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_function(n, rng);
      ASSERT_EQ(moebius(f), bentkit::oracle::anf_oracle(f)) << n;
    }
  }
}

TEST(Moebius, InvolutionExhaustiveAndRandom) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1U << n)); ++t) {
      const auto f = bentkit::oracle::from_table(n, t);
      ASSERT_EQ(moebius(moebius(f)), f);
    }
  }
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = random_function(1 + static_cast<int>(rng() % 16), rng);
    ASSERT_EQ(moebius(moebius(f)), f);
  }
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(BooleanFunction::constant(3, false)), 0);
  EXPECT_EQ(degree(BooleanFunction::constant(3, true)), 0);
  EXPECT_EQ(degree(parse_bf("bf:2:8")), 2);
  EXPECT_EQ(degree(parse_bf("bf:2:6")), 1);  // x1 ⊕ x2
  EXPECT_EQ(degree(bentkit::oracle::eval_anf(8, {0b10110101, 0b11})), 5);
}

TEST(DegreeSpace, Examples) {
  EXPECT_EQ(degree_space_log2(4, 2), 11U);
  EXPECT_EQ(degree_space_log2(2, 1), 3U);
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(degree_space_log2(n, n), std::uint64_t{1} << n);
  EXPECT_THROW(degree_space_log2(4, 5), DomainError);
  EXPECT_THROW(degree_space_log2(4, -1), DomainError);
}

TEST(DegreeSpace, MatchesCensusOfLowDegreeFunctionsAtN3) {
  for (int d = 0; d <= 3; ++d) {
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < 256; ++t) {
      const auto f = bentkit::oracle::from_table(3, t);
      const auto anf = bentkit::oracle::anf_oracle(f);
      bool low = true;
      for (std::uint64_t y = 0; y < 8; ++y) low = low && (!anf.bit(y) || bentkit::oracle::wt(y) <= d);
      EXPECT_EQ(degree(f) <= d, low);
      count += low;
    }
    EXPECT_EQ(count, std::uint64_t{1} << degree_space_log2(3, d)) << d;
  }
}

TEST(ConvolvePm, Examples) {
  std::mt19937_64 rng(14);
  const auto f = random_function(5, rng);
  IntegerVector delta{5, std::vector<std::int64_t>(32, 0)};
  delta.values[0] = 1;
  const auto out = convolve_pm(f, delta);
  for (std::uint64_t z = 0; z < 32; ++z) EXPECT_EQ(out.values[z], f.bit(z) ? -1 : 1);

  const IntegerVector ones{2, {1, 1, 1, 1}};
  EXPECT_EQ(convolve_pm(BooleanFunction::constant(2, false), ones).values,
            (std::vector<std::int64_t>{4, 4, 4, 4}));
  EXPECT_THROW(convolve_pm(f, ones), DomainError);
}

TEST(ConvolvePm, MatchesDefinition) {
  std::mt19937_64 rng(15);
  for (int n = 1; n <= 6; ++n) {
    const auto f = random_function(n, rng);
    IntegerVector g{n, std::vector<std::int64_t>(std::size_t{1} << n)};
    for (auto& v : g.values) v = static_cast<std::int64_t>(rng() % 7) - 3;
    const auto out = convolve_pm(f, g);
    for (std::uint64_t z = 0; z < f.size(); ++z) {
      std::int64_t acc = 0;
      for (std::uint64_t x = 0; x < f.size(); ++x) acc += bentkit::oracle::sign(f.bit(x)) * g.values[z ^ x];
      ASSERT_EQ(out.values[z], acc);
    }
  }
}

TEST(RestrictionIdentity, Examples) {
  std::mt19937_64 rng(16);
  const auto f = random_function(6, rng);
  EXPECT_TRUE(check_restriction_identity(f, FaceMask::full(6)));
  EXPECT_TRUE(check_restriction_identity(parse_bf("bf:2:8"), FaceMask(2, 0b01)));
  EXPECT_THROW(check_restriction_identity(f, FaceMask(5, 1)), DomainError);
}

TEST(RestrictionIdentity, HoldsExhaustivelyAtN2AndRandomly) {
  for (std::uint64_t t = 0; t < 16; ++t) {
    for (std::uint64_t m = 0; m < 4; ++m) {
      EXPECT_TRUE(check_restriction_identity(bentkit::oracle::from_table(2, t), FaceMask(2, m)));
    }
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto f = random_function(n, rng);
    const FaceMask m(n, rng() & ((std::uint64_t{1} << n) - 1));
    ASSERT_TRUE(check_restriction_identity(f, m));
  }
}

TEST(RestrictionIdentity, ConvolutionMatchesCosetSums) {
  // (-1)^f * 1_{Γ⊥} evaluated at z is the sum of (-1)^f over z ⊕ Γ⊥.
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto f = random_function(n, rng);
    const std::uint64_t perp = rng() & ((std::uint64_t{1} << n) - 1);
    IntegerVector ind{n, std::vector<std::int64_t>(f.size(), 0)};
    for (std::uint64_t x = 0; x < f.size(); ++x) ind.values[x] = (x & ~perp) == 0;
    const auto conv = convolve_pm(f, ind);
    for (std::uint64_t z = 0; z < f.size(); ++z) {
      ASSERT_EQ(conv.values[z], bentkit::oracle::coset_sum_oracle(f, perp, z));
    }
  }
}
