#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "primality.hpp"

namespace alphanum {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// Canonical prime-power decomposition. Parts are strictly increasing by
/// prime; the part list is empty exactly when n = 1.
class Factorization {
 public:
  Factorization() : n_(1) {}

  /// Builds from parts, checking the canonical-form invariants (primality is
  /// checked too, so this is not for hot loops).
  static Factorization from_parts(std::vector<PrimePower> parts) {
    Factorization f;
    f.n_ = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].exponent == 0) throw std::invalid_argument("zero exponent in factorization");
      if (i > 0 && parts[i].prime <= parts[i - 1].prime)
        throw std::invalid_argument("factorization primes must be strictly increasing");
      if (!is_prime(parts[i].prime)) throw std::invalid_argument("non-prime base " + alphanum::to_string(parts[i].prime));
      f.n_ *= pow_big(parts[i].prime, parts[i].exponent);
    }
    f.parts_ = std::move(parts);
    return f;
  }

  // Trusted constructor for parts already known to be canonical.
  static Factorization trusted(BigInt n, std::vector<PrimePower> parts) {
    Factorization f;
    f.n_ = std::move(n);
    f.parts_ = std::move(parts);
    return f;
  }

  const BigInt& n() const { return n_; }
  const std::vector<PrimePower>& parts() const { return parts_; }
  bool is_one() const { return parts_.empty(); }

  /// `p^e*p^e` form; exponent 1 is omitted and n = 1 prints as "1".
  std::string to_string() const {
    if (parts_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << '*';
      os << parts_[i].prime.get_str();
      if (parts_[i].exponent != 1) os << '^' << parts_[i].exponent;
    }
    return os.str();
  }

  /// Inverse of to_string(). Accepts factors in any order and merges repeats.
  static Factorization parse(const std::string& text) {
    if (text == "1") return Factorization();
    std::map<BigInt, unsigned> acc;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t star = text.find('*', pos);
      std::string tok = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      std::size_t caret = tok.find('^');
      BigInt p = parse_big(tok.substr(0, caret));
      unsigned long e = 1;
      if (caret != std::string::npos) e = std::stoul(tok.substr(caret + 1));
      if (e == 0) throw std::invalid_argument("zero exponent in '" + text + "'");
      acc[p] += static_cast<unsigned>(e);
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    std::vector<PrimePower> parts;
    for (auto& [p, e] : acc) parts.push_back({p, e});
    return from_parts(std::move(parts));
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.n_ == b.n_ && a.parts_ == b.parts_;
  }

 private:
  BigInt n_;
  std::vector<PrimePower> parts_;
};

namespace detail {

inline void split_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  if ((n & 1) == 0) {
    ++out[2];
    split_u64(n / 2, out);
    return;
  }
  std::uint64_t d = rho_u64(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

inline void split_big(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (fits_u64(n)) {
    std::map<std::uint64_t, unsigned> small;
    split_u64(to_u64(n), small);
    for (auto& [p, e] : small) out[to_big(p)] += e;
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = rho_big(n);
  split_big(d, out);
  split_big(n / d, out);
}

}  // namespace detail

/// Factorization of a 64-bit value: trial division by primes below 10^6,
/// then Pollard-Brent on the cofactor with deterministic Miller-Rabin.
inline Factorization factorize_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> parts;
  std::uint64_t m = n;
  for (std::uint32_t p : detail::trial_primes()) {
    if (static_cast<std::uint64_t>(p) * p > m) break;
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    parts.push_back({to_big(p), e});
  }
  if (m > 1) {
    std::uint64_t last = detail::trial_primes().back();
    if (m < last * last) {
      parts.push_back({to_big(m), 1});
    } else {
      std::map<std::uint64_t, unsigned> rest;
      detail::split_u64(m, rest);
      for (auto& [p, e] : rest) parts.push_back({to_big(p), e});
    }
  }
  return Factorization::trusted(to_big(n), std::move(parts));
}

inline Factorization factorize(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("factorize: n must be positive");
  if (fits_u64(n)) return factorize_u64(to_u64(n));
  std::vector<PrimePower> parts;
  BigInt m = n;
  for (std::uint32_t p : detail::trial_primes()) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    parts.push_back({to_big(p), e});
  }
  std::map<BigInt, unsigned> rest;
  detail::split_big(m, rest);
  for (auto& [p, e] : rest) parts.push_back({p, e});
  return Factorization::trusted(n, std::move(parts));
}

}  // namespace alphanum
