#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "divisors.hpp"
#include "sieve.hpp"

namespace alphanum {

/// Outcome of an exhaustive check of one proved statement up to a bound.
struct TheoremReport {
  std::string id;
  std::uint64_t bound = 0;
  std::uint64_t checked = 0;  // candidates that met the hypothesis
  bool pass = true;
  std::optional<std::uint64_t> counterexample;  // least one found
  std::string detail;
};

namespace detail {

using Candidate = std::function<bool(std::uint64_t, const SieveTable::SmallFactors&)>;
using Check = std::function<bool(std::uint64_t, const Factorization&)>;

inline TheoremReport scan(const std::string& id, const SieveTable& sieve, std::uint64_t lo, const Candidate& applies,
                          const Check& holds) {
  TheoremReport r;
  r.id = id;
  r.bound = sieve.bound();
  for (std::uint64_t n = lo; n <= sieve.bound(); ++n) {
    const auto sf = sieve.small_factors(n);
    if (!applies(n, sf)) continue;
    ++r.checked;
    if (!holds(n, sieve.factorization(n))) {
      r.pass = false;
      r.counterexample = n;
      r.detail = "fails at n = " + std::to_string(n);
      return r;
    }
  }
  r.detail = std::to_string(r.checked) + " cases, no counterexample";
  return r;
}

inline bool all_exponents_at_least(const SieveTable::SmallFactors& sf, unsigned k) {
  return std::all_of(sf.begin(), sf.end(), [k](const auto& pe) { return pe.second >= k; });
}

}  // namespace detail

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "multiperfect-strong",    // sigma(n) = k n with 2 <= k <= omega(n) is Strong
      "prime-power",            // prime powers are not alpha numbers at (1,1)
      "odd-squarefree",         // odd squarefree, omega >= 2: neither Strong nor Weak
      "odd-prime-sigma-powers", // odd, exponents >= 2, every sigma(p^e) prime: not Strong
      "two-prime-perfect",      // p1^a * p2 Strong only when perfect
      "abundancy-bound",        // ratio below the Rosser-Schoenfeld bound; sigma*phi < n^2
      "square-two-primes",      // squares with omega <= 2 not Strong for orders in {1,2,3}^2
      "large-upper-order",      // no Strong n at orders (1,4) and (2,5)
  };
  return ids;
}

inline TheoremReport verify_theorem(const std::string& id, const SieveTable& sieve) {
  using SF = SieveTable::SmallFactors;
  auto verdict = [&](const Factorization& f, const Order& o = Order::integer(1, 1)) {
    return classify_exact(f, o).verdict;
  };

  if (id == "multiperfect-strong") {
    return detail::scan(
        id, sieve, 2,
        [&](std::uint64_t n, const SF& sf) {
          const std::uint64_t s = sieve.sigma1(n);
          return s % n == 0 && s / n >= 2 && s / n <= sf.size();
        },
        [&](std::uint64_t, const Factorization& f) { return verdict(f) == Verdict::Strong; });
  }
  if (id == "prime-power") {
    return detail::scan(
        id, sieve, 2, [](std::uint64_t, const SF& sf) { return sf.size() == 1; },
        [&](std::uint64_t, const Factorization& f) { return verdict(f) == Verdict::NotAlpha; });
  }
  if (id == "odd-squarefree") {
    return detail::scan(
        id, sieve, 3,
        [](std::uint64_t n, const SF& sf) {
          return n % 2 == 1 && sf.size() >= 2 &&
                 std::all_of(sf.begin(), sf.end(), [](const auto& pe) { return pe.second == 1; });
        },
        [&](std::uint64_t, const Factorization& f) {
          const Verdict v = verdict(f);
          return v != Verdict::Strong && v != Verdict::Weak;
        });
  }
  if (id == "odd-prime-sigma-powers") {
    return detail::scan(
        id, sieve, 3,
        [](std::uint64_t n, const SF& sf) {
          if (n % 2 == 0 || !detail::all_exponents_at_least(sf, 2)) return false;
          return std::all_of(sf.begin(), sf.end(), [](const auto& pe) {
            return is_prime(sigma_k_prime_power(to_big(pe.first), pe.second, 1));
          });
        },
        [&](std::uint64_t, const Factorization& f) { return verdict(f) != Verdict::Strong; });
  }
  if (id == "two-prime-perfect") {
    return detail::scan(
        id, sieve, 2,
        [](std::uint64_t, const SF& sf) { return sf.size() == 2 && (sf[0].second == 1 || sf[1].second == 1); },
        [&](std::uint64_t n, const Factorization& f) {
          return verdict(f) != Verdict::Strong || sieve.sigma1(n) == 2 * n;
        });
  }
  if (id == "abundancy-bound") {
    return detail::scan(
        id, sieve, 3, [](std::uint64_t, const SF&) { return true; },
        [&](std::uint64_t, const Factorization& f) {
          return ratio_bound_check(f).ok && sigma(f) * divisor_stats(f).phi < f.n() * f.n();
        });
  }
  if (id == "square-two-primes") {
    return detail::scan(
        id, sieve, 2,
        [](std::uint64_t, const SF& sf) {
          return sf.size() <= 2 && std::all_of(sf.begin(), sf.end(), [](const auto& pe) { return pe.second % 2 == 0; });
        },
        [&](std::uint64_t, const Factorization& f) {
          for (unsigned a = 1; a <= 3; ++a)
            for (unsigned b = 1; b <= 3; ++b)
              if (verdict(f, Order::integer(a, b)) == Verdict::Strong) return false;
          return true;
        });
  }
  if (id == "large-upper-order") {
    return detail::scan(
        id, sieve, 1, [](std::uint64_t, const SF&) { return true; },
        [&](std::uint64_t, const Factorization& f) {
          return verdict(f, Order::integer(1, 4)) != Verdict::Strong && verdict(f, Order::integer(2, 5)) != Verdict::Strong;
        });
  }
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

inline TheoremReport verify_theorem(const std::string& id, std::uint64_t bound, std::uint64_t cap = kDefaultSieveCap) {
  if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
    throw std::invalid_argument("unknown theorem id '" + id + "'");
  return verify_theorem(id, build_sieve(std::max<std::uint64_t>(bound, 3), cap));
}

/// Largest sigma(n) / (n ln ln phi(n)) over 3 <= n <= bound, where defined.
/// The constant in the matching upper bound is not explicit, so this is
/// reported rather than asserted.
struct TotientQuotientMax {
  double value = 0;
  std::uint64_t argmax = 0;
};

inline TotientQuotientMax totient_quotient_max(const SieveTable& sieve) {
  TotientQuotientMax best;
  for (std::uint64_t n = 3; n <= sieve.bound(); ++n) {
    const auto q = totient_loglog_quotient(sieve.factorization(n));
    if (q && *q > best.value) best = {*q, n};
  }
  return best;
}

}  // namespace alphanum
