#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factorization.hpp"

namespace alphanum {

inline constexpr std::uint64_t kDefaultSieveCap = 100000000;  // entries

/// Smallest-prime-factor and sigma_1 tables for 1..bound. Immutable once
/// built, so a single table can be shared read-only across threads.
class SieveTable {
 public:
  using SmallFactors = std::vector<std::pair<std::uint32_t, unsigned>>;

  std::uint64_t bound() const { return bound_; }
  std::span<const std::uint32_t> spf() const { return spf_; }
  std::span<const std::uint64_t> sigma1() const { return sigma1_; }

  std::uint32_t spf(std::uint64_t n) const { return spf_.at(n); }
  std::uint64_t sigma1(std::uint64_t n) const { return sigma1_.at(n); }
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf_.at(n) == n; }

  SmallFactors small_factors(std::uint64_t n) const {
    SmallFactors out;
    check(n);
    while (n > 1) {
      std::uint32_t p = spf_[n];
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }

  Factorization factorization(std::uint64_t n) const {
    std::vector<PrimePower> parts;
    for (auto [p, e] : small_factors(n)) parts.push_back({to_big(p), e});
    return Factorization::trusted(to_big(n), std::move(parts));
  }

  friend SieveTable build_sieve(std::uint64_t bound, std::uint64_t cap);

 private:
  void check(std::uint64_t n) const {
    if (n == 0 || n > bound_) throw std::out_of_range("sieve lookup " + std::to_string(n) + " outside [1, bound]");
  }

  std::uint64_t bound_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> sigma1_;
};

/// Linear smallest-prime-factor sieve; sigma_1 is filled by stripping the
/// smallest prime power from each n and reusing the cofactor's entry.
inline SieveTable build_sieve(std::uint64_t bound, std::uint64_t cap = kDefaultSieveCap) {
  if (bound < 2) throw std::invalid_argument("sieve bound must be at least 2");
  if (bound > cap)
    throw resource_error("sieve bound " + std::to_string(bound) + " exceeds memory cap " + std::to_string(cap));
  SieveTable t;
  t.bound_ = bound;
  t.spf_.assign(bound + 1, 0);
  t.sigma1_.assign(bound + 1, 0);
  std::vector<std::uint32_t> primes;
  t.spf_[1] = 1;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      std::uint64_t ip = i * p;
      if (p > t.spf_[i] || ip > bound) break;
      t.spf_[ip] = p;
    }
  }
  t.sigma1_[1] = 1;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    const std::uint64_t p = t.spf_[n];
    std::uint64_t m = n, pe = 1, s = 1;
    while (m % p == 0) {
      m /= p;
      pe *= p;
      s += pe;
    }
    t.sigma1_[n] = t.sigma1_[m] * s;
  }
  return t;
}

}  // namespace alphanum
