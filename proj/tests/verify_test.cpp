#include <bentkit/verify.hpp>

#include <bentkit/errors.hpp>

#include <gtest/gtest.h>

using namespace bentkit;

TEST(Verify, AllSuitesPassWithSmallSamples) {
  for (auto name : suite_names()) {
    SuiteOptions o;
    o.samples = name == "prop1" ? 2 : 50;
    const SuiteResult r = run_suite(name, o);
    EXPECT_TRUE(r.passed()) << name << ": " << r.first_failure;
    EXPECT_GT(r.checked, 0U) << name;
  }
}

TEST(Verify, Lemma1RandomExercisesPremise) {
  SuiteOptions o;
  o.n = 6;
  o.samples = 200;
  const SuiteResult r = run_suite("lemma1", o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 200U);
  EXPECT_GE(std::stoull(r.details.at("premise_true")), 100U);
}

TEST(Verify, DeterministicForSeed) {
  SuiteOptions o;
  o.n = 8;
  o.samples = 30;
  o.seed = 9;
  EXPECT_EQ(suite_to_json(run_suite("convolution", o)), suite_to_json(run_suite("convolution", o)));
}

TEST(Verify, Errors) {
  EXPECT_THROW(run_suite("nope", {}), DomainError);
  SuiteOptions o;
  o.n = 6;
  EXPECT_THROW(run_suite("flats", o), DomainError);
  o.n = 3;
  EXPECT_THROW(run_suite("prop1", o), DomainError);
}

TEST(Verify, FlatsReportsCount) {
  const SuiteResult r = run_suite("flats", {});
  EXPECT_EQ(r.details.at("flats_total"), "140");
  EXPECT_EQ(r.details.at("flats_sum_pm2"), "80");
}
