#include <gtest/gtest.h>

#include <cmath>

#include "alphanum/alphanum.hpp"

using namespace alphanum;

namespace {

std::vector<std::uint64_t> naive_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(BigInt, ParsesDecimalOnly) {
  EXPECT_EQ(parse_big("123456789012345678901234567890").get_str(), "123456789012345678901234567890");
  EXPECT_THROW(parse_big(""), std::invalid_argument);
  EXPECT_THROW(parse_big("-3"), std::invalid_argument);
  EXPECT_THROW(parse_big("12a"), std::invalid_argument);
  EXPECT_THROW(parse_big(" 1"), std::invalid_argument);
}

TEST(BigInt, U64Conversions) {
  const std::uint64_t big = 18446744073709551615ull;
  EXPECT_EQ(to_u64(to_big(big)), big);
  EXPECT_TRUE(fits_u64(to_big(big)));
  EXPECT_FALSE(fits_u64(to_big(big) + 1));
  EXPECT_THROW(to_u64(to_big(big) + 1), std::overflow_error);
}

TEST(BigInt, LogOfHugeValue) {
  EXPECT_NEAR(log_big(pow_big(2, 5000)), 5000 * std::log(2.0), 1e-9 * 5000);
  EXPECT_NEAR(log_big(BigInt(10)), std::log(10.0), 1e-15);
}

TEST(Primality, MatchesTrialDivisionBelowTwentyThousand) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime_u64(n), naive_prime(n)) << n;
}

TEST(Primality, LargeKnownValues) {
  EXPECT_TRUE(is_prime_u64((1ull << 61) - 1));
  EXPECT_FALSE(is_prime_u64((1ull << 61) + 1));
  EXPECT_FALSE(is_prime_u64(561));                   // Carmichael
  EXPECT_FALSE(is_prime_u64(3215031751ull));         // strong pseudoprime to bases 2,3,5,7
  EXPECT_TRUE(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_TRUE(is_prime(pow_big(2, 89) - 1));
  EXPECT_FALSE(is_prime(pow_big(2, 67) - 1));
}

TEST(Factorization, CanonicalForm) {
  const Factorization f = factorize_u64(10920);
  EXPECT_EQ(f.to_string(), "2^3*3*5*7*13");
  EXPECT_EQ(f.n(), 10920);
  EXPECT_EQ(factorize_u64(1).to_string(), "1");
  EXPECT_TRUE(factorize_u64(1).is_one());
  EXPECT_EQ(factorize_u64(2).to_string(), "2");
  EXPECT_EQ(factorize_u64(1024).to_string(), "2^10");
}

TEST(Factorization, RejectsNonPositive) {
  EXPECT_THROW(factorize(BigInt(0)), std::invalid_argument);
  EXPECT_THROW(factorize(BigInt(-6)), std::invalid_argument);
}

TEST(Factorization, LargeSemiprimeAndBeyondSixtyFourBits) {
  EXPECT_EQ(factorize(pow_big(2, 67) - 1).to_string(), "193707721*761838257287");
  const BigInt n = to_big(1000000007ull) * to_big(998244353ull) * to_big(1000000009ull);
  EXPECT_EQ(factorize(n).to_string(), "998244353*1000000007*1000000009");
  const BigInt m = pow_big(2, 70) * 3 * 5;
  EXPECT_EQ(factorize(m).to_string(), "2^70*3*5");
}

TEST(Factorization, ProductRecoversN) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const Factorization f = factorize_u64(n);
    BigInt p = 1;
    for (const auto& [q, e] : f.parts()) {
      ASSERT_TRUE(is_prime(q));
      p *= pow_big(q, e);
    }
    ASSERT_EQ(p, n);
  }
}

TEST(Factorization, ParseAndRoundTrip) {
  EXPECT_EQ(Factorization::parse("13*7*3^2").to_string(), "3^2*7*13");
  EXPECT_EQ(Factorization::parse("2*2*3").to_string(), "2^2*3");
  EXPECT_EQ(Factorization::parse("1").n(), 1);
  EXPECT_EQ(Factorization::parse("2^3*3*5*7*13").n(), 10920);
  EXPECT_THROW(Factorization::parse("4*3"), std::invalid_argument);
  EXPECT_THROW(Factorization::parse("2^0"), std::invalid_argument);
  EXPECT_THROW(Factorization::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Factorization::parse(""), std::invalid_argument);
  for (std::uint64_t n : {6ull, 28ull, 544635ull, 32760ull})
    EXPECT_EQ(Factorization::parse(factorize_u64(n).to_string()), factorize_u64(n));
}

TEST(Factorization, FromPartsValidates) {
  EXPECT_NO_THROW(Factorization::from_parts({{2, 2}, {7, 1}}));
  EXPECT_THROW(Factorization::from_parts({{7, 1}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(Factorization::from_parts({{2, 1}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(Factorization::from_parts({{9, 1}}), std::invalid_argument);
  EXPECT_THROW(Factorization::from_parts({{3, 0}}), std::invalid_argument);
}

TEST(Divisors, StatsOf10920) {
  const DivisorStats s = divisor_stats(factorize_u64(10920));
  EXPECT_EQ(s.omega, 5u);
  EXPECT_EQ(s.big_omega, 7u);
  EXPECT_EQ(s.tau, 64);
  EXPECT_EQ(s.phi, 2304);
  EXPECT_EQ(sigma(factorize_u64(10920)), 40320);
}

TEST(Divisors, StatsOfOne) {
  const DivisorStats s = divisor_stats(factorize_u64(1));
  EXPECT_EQ(s.omega, 0u);
  EXPECT_EQ(s.big_omega, 0u);
  EXPECT_EQ(s.tau, 1);
  EXPECT_EQ(s.phi, 1);
  EXPECT_EQ(sigma(factorize_u64(1)), 1);
}

TEST(Divisors, SigmaKMatchesDivisorLoop) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto ds = naive_divisors(n);
    for (unsigned k = 0; k <= 3; ++k) {
      BigInt s = 0;
      for (auto d : ds) s += pow_big(to_big(d), k);
      ASSERT_EQ(sigma_k_exact(factorize_u64(n), k), s) << n << " k=" << k;
    }
  }
}

TEST(Divisors, SigmaOfPrimePowers) {
  EXPECT_EQ(sigma_k_prime_power(3, 7, 1), 3280);
  EXPECT_EQ(sigma_k_prime_power(5, 5, 1), 3906);
  EXPECT_EQ(sigma_k_prime_power(13, 3, 1), 2380);
  EXPECT_EQ(sigma_k_prime_power(2, 8, 1), 511);
  EXPECT_EQ(sigma_k_prime_power(7, 2, 0), 3);
  EXPECT_EQ(sigma_k_prime_power(2, 3, 2), 85);
}

TEST(Divisors, ListIsSortedAndCapped) {
  const auto d = divisors_list(factorize_u64(28));
  const std::vector<BigInt> want{1, 2, 4, 7, 14, 28};
  EXPECT_EQ(d, want);
  EXPECT_EQ(divisors_list(factorize_u64(1)), std::vector<BigInt>{1});
  EXPECT_EQ(divisors_list(factorize_u64(10920)).size(), 64u);
  EXPECT_THROW(divisors_list(factorize_u64(10920), 63), resource_error);
}

TEST(Divisors, OreHarmonic) {
  EXPECT_TRUE(is_ore_harmonic(factorize_u64(140)));  // 140 * 12 / 336 = 5
  EXPECT_TRUE(is_ore_harmonic(factorize_u64(1)));
  EXPECT_TRUE(is_ore_harmonic(factorize_u64(6)));
  EXPECT_TRUE(is_ore_harmonic(factorize_u64(28)));
  EXPECT_FALSE(is_ore_harmonic(factorize_u64(12)));
  EXPECT_FALSE(is_ore_harmonic(factorize_u64(2)));
}

TEST(Rational, ReducesToLowestTerms) {
  const ReducedRatio r(40320, 10920);
  EXPECT_EQ(r.num(), 48);
  EXPECT_EQ(r.den(), 13);
  EXPECT_EQ(r.to_string(), "48/13");
  EXPECT_EQ(r.max_term(), 48);
  EXPECT_EQ(ReducedRatio(1962240, 707840).to_string(), "219/79");
  EXPECT_EQ(ReducedRatio(13, 9).max_term(), 13);
  EXPECT_EQ(ReducedRatio(0, 5).to_string(), "0/1");
  EXPECT_DOUBLE_EQ(ReducedRatio(5, 2).to_double(), 2.5);
}

TEST(Rational, RejectsBadTerms) {
  EXPECT_THROW(ReducedRatio(1, 0), std::invalid_argument);
  EXPECT_THROW(ReducedRatio(-1, 2), std::invalid_argument);
  EXPECT_THROW(ReducedRatio(1, -2), std::invalid_argument);
}

TEST(Sieve, AgreesWithFactorization) {
  const SieveTable t = build_sieve(20000);
  EXPECT_EQ(t.bound(), 20000u);
  EXPECT_EQ(t.sigma1(1), 1u);
  EXPECT_EQ(t.spf(1), 1u);
  for (std::uint64_t n = 2; n <= 20000; ++n) {
    const Factorization f = factorize_u64(n);
    ASSERT_EQ(t.factorization(n), f) << n;
    ASSERT_EQ(to_big(t.sigma1(n)), sigma(f)) << n;
    ASSERT_EQ(t.spf(n), to_u64(f.parts().front().prime)) << n;
    ASSERT_EQ(t.is_prime(n), naive_prime(n)) << n;
  }
  EXPECT_TRUE(t.small_factors(1).empty());
}

TEST(Sieve, BoundsAndCaps) {
  EXPECT_THROW(build_sieve(1), std::invalid_argument);
  EXPECT_THROW(build_sieve(1001, 1000), resource_error);
  EXPECT_NO_THROW(build_sieve(1000, 1000));
  const SieveTable t = build_sieve(10);
  EXPECT_THROW(t.sigma1(11), std::out_of_range);
  EXPECT_THROW(t.factorization(0), std::out_of_range);
}
