#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace alphanum::testing;

namespace {

void expect_clean(const PropertyOutcome& p, std::uint64_t min_cases) {
  EXPECT_EQ(p.failures, 0u) << p.name << ": " << p.first_failure;
  EXPECT_GE(p.cases, min_cases) << p.name;
}

}  // namespace

TEST(Properties, BruteForceOracles) {
  EXPECT_EQ(brute_sigma(12, 1), 28u);
  EXPECT_EQ(brute_sigma(12, 0), 6u);
  EXPECT_EQ(brute_omega(360), 3u);
  EXPECT_EQ(brute_verdict(6), alphanum::Verdict::Strong);
  EXPECT_EQ(brute_verdict(24), alphanum::Verdict::Weak);
  EXPECT_EQ(brute_verdict(8), alphanum::Verdict::NotAlpha);
}

TEST(Properties, OracleEquivalence) {
  std::mt19937_64 rng(1);
  expect_clean(oracle_equivalence(rng), 500);
}

TEST(Properties, ExactMultiplicativity) {
  std::mt19937_64 rng(2);
  expect_clean(exact_multiplicativity(rng), 500);
}

TEST(Properties, FloatingMultiplicativity) {
  std::mt19937_64 rng(3);
  expect_clean(floating_multiplicativity(rng), 500);
}

TEST(Properties, SieveAgreement) {
  std::mt19937_64 rng(4);
  expect_clean(sieve_agreement(rng), 500);
}

TEST(Properties, PartitionInvariance) {
  std::mt19937_64 rng(5);
  expect_clean(partition_invariance(rng), 100);
}

TEST(Properties, JsonRoundTrip) {
  std::mt19937_64 rng(6);
  expect_clean(json_round_trip(rng), 400);
}

TEST(Properties, FullSuiteIsDeterministic) {
  const auto a = run_property_suite();
  const auto b = run_property_suite();
  ASSERT_EQ(a.size(), b.size());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    expect_clean(a[i], 1);
    EXPECT_EQ(a[i].cases, b[i].cases);
    total += a[i].cases;
  }
  EXPECT_GE(total, 2500u);
}
