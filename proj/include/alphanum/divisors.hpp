#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "factorization.hpp"

namespace alphanum {

struct DivisorStats {
  unsigned omega = 0;      // distinct primes
  unsigned big_omega = 0;  // primes with multiplicity
  BigInt tau = 1;          // number of divisors
  BigInt phi = 1;          // Euler totient
};

inline DivisorStats divisor_stats(const Factorization& f) {
  DivisorStats s;
  s.omega = static_cast<unsigned>(f.parts().size());
  for (const auto& [p, e] : f.parts()) {
    s.big_omega += e;
    s.tau *= e + 1;
    // phi(p^e) = p^(e-1) (p - 1)
    s.phi *= pow_big(p, e - 1) * (p - 1);
  }
  return s;
}

/// sigma_k(p^e) = 1 + p^k + ... + p^(ek).
inline BigInt sigma_k_prime_power(const BigInt& p, unsigned e, unsigned long k) {
  if (k == 0) return BigInt(e + 1);
  BigInt pk = pow_big(p, k);
  return (pow_big(pk, e + 1) - 1) / (pk - 1);
}

/// Exact sum of d^k over the divisors of n, via the multiplicative closed form.
inline BigInt sigma_k_exact(const Factorization& f, unsigned long k) {
  BigInt r = 1;
  for (const auto& [p, e] : f.parts()) r *= sigma_k_prime_power(p, e, k);
  return r;
}

inline BigInt sigma(const Factorization& f) { return sigma_k_exact(f, 1); }

inline constexpr std::uint64_t kDefaultDivisorCap = 1000000;

/// Checks tau(n) <= cap without materializing anything.
inline void check_divisor_cap(const Factorization& f, std::uint64_t cap) {
  BigInt tau = divisor_stats(f).tau;
  if (tau > to_big(cap))
    throw resource_error("divisor count " + to_string(tau) + " exceeds cap " + std::to_string(cap));
}

/// All divisors of n in ascending order.
inline std::vector<BigInt> divisors_list(const Factorization& f, std::uint64_t cap = kDefaultDivisorCap) {
  check_divisor_cap(f, cap);
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : f.parts()) {
    const std::size_t base = divs.size();
    BigInt pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Harmonic-mean integrality: sigma(n) divides n * tau(n).
inline bool is_ore_harmonic(const Factorization& f) {
  BigInt num = f.n() * divisor_stats(f).tau;
  return mpz_divisible_p(num.get_mpz_t(), sigma(f).get_mpz_t()) != 0;
}

}  // namespace alphanum
