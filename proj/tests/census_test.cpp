#include <bentkit/census.hpp>

#include <bentkit/bent.hpp>
#include <bentkit/bounds.hpp>
#include <bentkit/transforms.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace bentkit;

TEST(Census, NaiveN2IsOddWeightTables) {
  const auto r = enumerate_bent_naive(2, {1, true});
  EXPECT_EQ(r.count, 8U);
  EXPECT_EQ(r.candidates, 16U);
  ASSERT_EQ(r.functions.size(), 8U);
  for (const auto& f : r.functions) EXPECT_TRUE(weight(f) == 1 || weight(f) == 3);
  EXPECT_TRUE(std::is_sorted(r.functions.begin(), r.functions.end(), table_less));
  EXPECT_EQ(format_bf(r.functions.front()), "bf:2:1");
}

TEST(Census, NaiveN4) { EXPECT_EQ(enumerate_bent_naive(4).count, 896U); }

TEST(Census, DegreeRestricted) {
  const auto r2 = enumerate_bent_by_degree(2);
  EXPECT_EQ(r2.candidates, 16U);  // degree <= 2 at n = 2
  EXPECT_EQ(r2.count, 8U);
  const auto r4 = enumerate_bent_by_degree(4);
  EXPECT_EQ(r4.candidates, 2048U);
  EXPECT_EQ(r4.count, 896U);
  EXPECT_EQ(enumerate_bent_naive(4).candidates / r4.candidates, 32U);
}

TEST(Census, MethodsProduceIdenticalStreams) {
  for (int n : {2, 4}) {
    const auto a = enumerate_bent_naive(n, {1, true});
    const auto b = enumerate_bent_by_degree(n, {1, true});
    EXPECT_EQ(a.functions, b.functions);
  }
}

TEST(Census, ShardingIsDeterministic) {
  const auto base = enumerate_bent_by_degree(4, {1, true});
  for (unsigned k : {4U, 16U}) {
    EXPECT_EQ(enumerate_bent_by_degree(4, {k, true}).functions, base.functions);
    EXPECT_EQ(enumerate_bent_naive(4, {k, true}).functions, base.functions);
    EXPECT_EQ(enumerate_bent_naive(4, {k, false}).count, 896U);
  }
  EXPECT_EQ(enumerate_bent_naive(2, {64, false}).count, 8U);  // more shards than candidates
}

TEST(Census, DegreeCap) {
  EXPECT_EQ(bent_degree_cap(2), 2);
  EXPECT_EQ(bent_degree_cap(4), 2);
  EXPECT_EQ(bent_degree_cap(8), 4);
  // x1x2 ⊕ affine: degree 2 > n/2 = 1, yet bent.
  EXPECT_TRUE(is_bent(parse_bf("bf:2:8")));
  EXPECT_EQ(degree(parse_bf("bf:2:8")), 2);
}

TEST(Census, Caps) {
  EXPECT_THROW(enumerate_bent_naive(3), DomainError);
  EXPECT_THROW(enumerate_bent_by_degree(5), DomainError);
  EXPECT_THROW(enumerate_bent_naive(0), DomainError);
  EXPECT_THROW(enumerate_bent_naive(6), ResourceError);
  EXPECT_THROW(enumerate_bent_by_degree(6), ResourceError);
  try {
    bent_count(6, CensusMethod::degree_restricted);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("2^24"), std::string::npos);
  }
}

TEST(Census, BentCountCacheAndDispatch) {
  EXPECT_EQ(bent_count(2, CensusMethod::naive), 8U);
  EXPECT_EQ(bent_count(4, CensusMethod::degree_restricted), 896U);
  EXPECT_EQ(bent_count(4, CensusMethod::naive), bent_count(4, CensusMethod::degree_restricted));
  EXPECT_EQ(parse_census_method("degree"), CensusMethod::degree_restricted);
  EXPECT_EQ(parse_census_method("naive"), CensusMethod::naive);
  EXPECT_THROW(parse_census_method("fast"), DomainError);
}

TEST(Census, ClosureAtN4) {
  for (const auto& b : enumerate_bent_by_degree(4, {1, true}).functions) {
    ASSERT_LE(degree(b), 2);
    ASSERT_TRUE(is_bent(dual_bent(b)));
    const auto d = two_flat_sum_distribution(b);
    ASSERT_EQ(d.count(2) + d.count(-2), 80U);
  }
  const double log_n4 = std::log2(896.0);
  EXPECT_NEAR(log_n4, 9.807354922057604, 1e-12);
  EXPECT_LT(log_n4, trivial_upper_log2(4).convert_to<double>());
}
