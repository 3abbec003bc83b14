#include <bentkit/reconstruct.hpp>

#include <bentkit/transforms.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace bentkit;

namespace {

// Random function whose ANF is supported on B_r.
BooleanFunction random_low_degree(int n, int r, std::mt19937_64& rng) {
  std::vector<std::uint64_t> monomials;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    if (bentkit::oracle::wt(y) <= r && (rng() & 1U)) monomials.push_back(y);
  }
  return bentkit::oracle::eval_anf(n, monomials);
}

}  // namespace

TEST(BallAssignment, Validation) {
  EXPECT_NO_THROW(make_ball_assignment(2, 1, {0, 1, 1}));
  EXPECT_THROW(make_ball_assignment(2, 1, {0, 1}), DomainError);
  EXPECT_THROW(make_ball_assignment(2, 3, {0, 1, 1, 0}), DomainError);
  EXPECT_THROW(make_ball_assignment(2, 1, {0, 2, 1}), DomainError);
}

TEST(Reconstruct, Examples) {
  EXPECT_EQ(format_bf(reconstruct_from_ball(make_ball_assignment(2, 1, {0, 1, 1}))), "bf:2:6");
  std::mt19937_64 rng(1);
  const auto f = bentkit::oracle::random_function(5, rng);
  EXPECT_EQ(reconstruct_from_ball(restrict_to_ball(f, 5)), f);
}

TEST(Reconstruct, AllDegreeTwoFunctionsAtN4) {
  std::uint64_t seen = 0;
  for (std::uint64_t t = 0; t < 65536; ++t) {
    const auto g = bentkit::oracle::from_table(4, t);
    if (degree(g) > 2) continue;
    ++seen;
    ASSERT_EQ(reconstruct_from_ball(restrict_to_ball(g, 2)), g);
  }
  EXPECT_EQ(seen, 2048U);
}

TEST(Reconstruct, UniquenessExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      std::set<std::vector<std::uint8_t>> restrictions;
      std::uint64_t functions = 0;
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1U << n)); ++t) {
        const auto f = bentkit::oracle::from_table(n, t);
        if (degree(f) > r) continue;
        ++functions;
        restrictions.insert(restrict_to_ball(f, r).values);
      }
      EXPECT_EQ(functions, std::uint64_t{1} << degree_space_log2(n, r));
      EXPECT_EQ(restrictions.size(), functions) << "n=" << n << " r=" << r;
    }
  }
}

TEST(Reconstruct, RandomRoundTripN6) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_low_degree(6, 3, rng);
    ASSERT_EQ(reconstruct_from_ball(restrict_to_ball(f, 3)), f);
  }
}

TEST(Reconstruct, HighWeightAnfVanishes) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int r = static_cast<int>(rng() % (n + 1));
    std::vector<std::uint8_t> values(degree_space_log2(n, r));
    for (auto& v : values) v = rng() & 1U;
    const auto f = reconstruct_from_ball(make_ball_assignment(n, r, values));
    const auto anf = bentkit::oracle::anf_oracle(f);
    for (std::uint64_t y = 0; y < f.size(); ++y) {
      if (bentkit::oracle::wt(y) > r) ASSERT_FALSE(anf.bit(y));
    }
    EXPECT_EQ(restrict_to_ball(f, r).values, values);
  }
}

TEST(BallAssignmentJson, RoundTripAndErrors) {
  const auto a = make_ball_assignment(3, 1, {1, 0, 1, 1});
  EXPECT_EQ(format_ball_assignment(a), R"({"n":3,"r":1,"values":[1,0,1,1]})");
  EXPECT_EQ(parse_ball_assignment(format_ball_assignment(a)), a);
  EXPECT_THROW(parse_ball_assignment("{"), ParseError);
  EXPECT_THROW(parse_ball_assignment(R"({"n":3,"values":[1]})"), ParseError);
  EXPECT_THROW(parse_ball_assignment(R"({"n":3,"r":1,"values":[1,0,2,1]})"), ParseError);
  EXPECT_THROW(parse_ball_assignment(R"({"n":3,"r":1,"values":[1,0,1]})"), DomainError);
}

TEST(Lemma1, Examples) {
  std::mt19937_64 rng(4);
  const auto f = bentkit::oracle::random_function(5, rng);
  for (std::uint64_t m = 0; m < 32; ++m) {
    EXPECT_TRUE(lemma1_premise(f, f, FaceMask(5, m)));
    EXPECT_TRUE(lemma1_conclusion(f, f, FaceMask(5, m)));
  }
  // Γ = {0}: premise compares W(0), i.e. weights.
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = bentkit::oracle::random_function(5, rng);
    EXPECT_EQ(lemma1_premise(f, g, FaceMask(5, 0)), weight(f) == weight(g));
    // Full Γ: conclusion compares pointwise signs.
    EXPECT_EQ(lemma1_conclusion(f, g, FaceMask::full(5)), f == g);
  }
  // W_AND = [2,2,2,-2], W_{x1⊕x2} = [0,0,0,4]; Γ(01) = {0, 1} differs at 0.
  EXPECT_FALSE(lemma1_premise(parse_bf("bf:2:8"), parse_bf("bf:2:6"), FaceMask(2, 0b01)));
  EXPECT_THROW(lemma1_premise(f, BooleanFunction(4), FaceMask(5, 1)), DomainError);
  EXPECT_THROW(lemma1_conclusion(f, f, FaceMask(4, 1)), DomainError);
}

TEST(Lemma1, ComplementReport) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = bentkit::oracle::random_function(4, rng);
    const auto f = xor_add(g, BooleanFunction::constant(4, true));
    const FaceMask gamma(4, rng() & 15);
    const auto r = check_lemma1(f, g, gamma);
    // W_{g⊕1} = -W_g, so the premise needs W_g ≡ 0 on Γ.
    bool zero_on_gamma = true;
    const auto w = walsh_fast(g);
    for_each_submask(gamma.mask(), [&](std::uint64_t y) { zero_on_gamma = zero_on_gamma && w.values[y] == 0; });
    EXPECT_EQ(r.premise, zero_on_gamma);
    EXPECT_TRUE(r.holds());
  }
}

TEST(Lemma1, VacuousWhenPremiseFalse) {
  const Lemma1Report r{false, false};
  EXPECT_TRUE(r.holds());
  EXPECT_FALSE((Lemma1Report{true, false}).holds());
}

TEST(Lemma1, ExhaustiveN2AllMasks) {
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      for (std::uint64_t m = 0; m < 4; ++m) {
        ASSERT_TRUE(check_lemma1(bentkit::oracle::from_table(2, a), bentkit::oracle::from_table(2, b),
                                 FaceMask(2, m)).holds());
      }
    }
  }
}
