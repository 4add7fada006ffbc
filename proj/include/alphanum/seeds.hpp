#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigint.hpp"
#include "classify.hpp"
#include "divisors.hpp"
#include "factorization.hpp"
#include "primality.hpp"
#include "records.hpp"
#include "sieve.hpp"
#include "errors.hpp"

namespace alphanum {

using PrimeMap = std::map<BigInt, unsigned>;

namespace detail {

inline BigInt value_of(const PrimeMap& parts) {
  BigInt v = 1;
  for (const auto& [p, e] : parts) v *= pow_big(p, e);
  return v;
}

inline BigInt next_prime(const BigInt& p) {
  BigInt r;
  mpz_nextprime(r.get_mpz_t(), p.get_mpz_t());
  return r;
}

/// Prime map of sigma(u) = prod sigma(p^e), each p^e taken as exact.
inline PrimeMap sigma_map(const PrimeMap& parts) {
  PrimeMap out;
  for (const auto& [p, e] : parts) {
    const Factorization f = factorize(sigma_k_prime_power(p, e, 1));
    for (const auto& [q, k] : f.parts()) out[q] += k;
  }
  return out;
}

/// Odd prime powers q^e of `s` with q outside `have` that cannot be absorbed
/// by a numerator bounded by `cap` (q^e > cap), so q must divide n.
inline PrimeMap extract_forced(const PrimeMap& s, const PrimeMap& have, unsigned cap) {
  PrimeMap out;
  for (const auto& [q, e] : s) {
    if (q == 2 || have.count(q)) continue;
    if (pow_big(q, e) > cap) out[q] = e;
  }
  return out;
}

inline PrimeMap to_prime_map(const Factorization& f) {
  PrimeMap m;
  for (const auto& [p, e] : f.parts()) m[p] = e;
  return m;
}

inline Factorization to_factorization(const PrimeMap& m) {
  std::vector<PrimePower> parts;
  for (const auto& [p, e] : m) parts.push_back({p, e});
  return Factorization::trusted(value_of(m), std::move(parts));
}

}  // namespace detail

/// Largest omega an odd n <= bound can have when it contains `parts` exactly
/// and every other prime factor exceeds `p_star`.
inline unsigned omega_cap(const PrimeMap& parts, const BigInt& p_star, std::uint64_t bound) {
  BigInt u = detail::value_of(parts);
  const BigInt b = to_big(bound);
  unsigned k = 0;
  BigInt q = p_star;
  while (u <= b) {
    q = detail::next_prime(q);
    if (parts.count(q)) continue;
    if (u * q > b) break;
    u *= q;
    ++k;
  }
  return static_cast<unsigned>(parts.size()) + k;
}

/// Least-prime power p*^lambda* from which seeds grow.
struct Generator {
  std::uint64_t p_star = 3;
  unsigned lambda_star = 1;

  BigInt value() const { return pow_big(to_big(p_star), lambda_star); }
  std::string to_string() const { return std::to_string(p_star) + "^" + std::to_string(lambda_star); }
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct GeneratorRow {
  std::uint64_t p_star = 0;
  unsigned lambda_cap = 0;
  unsigned omega_cap = 0;
};

/// Odd least primes p* that can head a non-squarefree n <= bound with at
/// least three prime factors, the largest exponent lambda with
/// p*^lambda * q1 * q2 <= bound (q1 < q2 the next odd primes), and the omega
/// cap at that exponent.
inline std::vector<GeneratorRow> generator_table(std::uint64_t bound) {
  std::vector<GeneratorRow> rows;
  const BigInt b = to_big(bound);
  for (BigInt p = 3;; p = detail::next_prime(p)) {
    const BigInt q1 = detail::next_prime(p), q2 = detail::next_prime(q1);
    if (p * p * q1 * q2 > b) break;
    unsigned lambda = 2;
    while (pow_big(p, lambda + 1) * q1 * q2 <= b) ++lambda;
    rows.push_back({to_u64(p), lambda, omega_cap(PrimeMap{{p, lambda}}, p, bound)});
  }
  return rows;
}

/// A partial odd candidate u: its least prime power is the generator.
struct AlphaSeed {
  Generator generator;
  Factorization factors;
  unsigned length = 0;  // components adjoined to the generator
  std::uint64_t bound = 0;

  const BigInt& value() const { return factors.n(); }

  /// Validates u (odd, <= bound) and derives the generator from its least prime.
  static AlphaSeed from(const Factorization& u, std::uint64_t bound) {
    if (u.is_one() || u.parts().front().prime == 2) throw std::invalid_argument("seed must be odd and > 1");
    if (u.n() > to_big(bound)) throw std::invalid_argument("seed exceeds bound");
    AlphaSeed s;
    s.generator = {to_u64(u.parts().front().prime), u.parts().front().exponent};
    s.factors = u;
    s.length = static_cast<unsigned>(u.parts().size() - 1);
    s.bound = bound;
    return s;
  }
};

/// Seeds grown from a generator: the forced odd prime powers of sigma(generator)
/// plus the forced ones of sigma of those, each taken at any exponent at
/// least the forced one, with the product kept <= bound. A forced prime
/// below p* makes the set empty.
inline std::vector<AlphaSeed> build_seeds(const Generator& g, std::uint64_t bound) {
  const BigInt p = to_big(g.p_star);
  if (g.p_star % 2 == 0 || !is_prime(p)) throw std::invalid_argument("generator prime must be an odd prime");
  if (g.lambda_star == 0 || g.value() > to_big(bound)) throw std::invalid_argument("generator exceeds bound");

  const PrimeMap gen{{p, g.lambda_star}};
  const unsigned cap = omega_cap(gen, p, bound);
  const PrimeMap first = detail::extract_forced(detail::sigma_map(gen), gen, cap);
  if (!first.empty() && first.begin()->first < p) return {};

  PrimeMap have = gen;
  have.insert(first.begin(), first.end());
  PrimeMap second;
  for (const auto& [q, e] : first) {
    for (const auto& [r, k] : detail::extract_forced(detail::sigma_map(PrimeMap{{q, e}}), have, cap)) {
      second[r] = std::max(second[r], k);
    }
  }
  if (!second.empty() && second.begin()->first < p) return {};

  PrimeMap comps = first;
  comps.insert(second.begin(), second.end());
  std::vector<std::pair<BigInt, unsigned>> order(comps.begin(), comps.end());

  std::vector<AlphaSeed> out;
  const BigInt b = to_big(bound);
  PrimeMap current = gen;
  std::function<void(std::size_t, const BigInt&)> grow = [&](std::size_t i, const BigInt& value) {
    if (i == order.size()) {
      AlphaSeed s;
      s.generator = g;
      s.factors = detail::to_factorization(current);
      s.length = static_cast<unsigned>(order.size());
      s.bound = bound;
      out.push_back(std::move(s));
      return;
    }
    const auto& [q, min_e] = order[i];
    BigInt v = value * pow_big(q, min_e);
    for (unsigned e = min_e; v <= b; ++e, v *= q) {
      current[q] = e;
      grow(i + 1, v);
    }
    current.erase(q);
  };
  grow(0, g.value());
  std::sort(out.begin(), out.end(), [](const AlphaSeed& x, const AlphaSeed& y) { return x.value() < y.value(); });
  return out;
}

enum class ChiReason { viable, forced_smaller_prime, exceeds_bound, forced_even_factor };

inline std::string to_string(ChiReason r) {
  switch (r) {
    case ChiReason::viable: return "viable";
    case ChiReason::forced_smaller_prime: return "forced-smaller-prime";
    case ChiReason::exceeds_bound: return "exceeds-bound";
    case ChiReason::forced_even_factor: return "forced-even-factor";
  }
  return "?";
}

/// The least integer a seed forces: the seed times every odd prime power
/// that sigma of the running product pushes into n, iterated to a fixed point.
struct VirtualAlpha {
  AlphaSeed seed;
  BigInt value;            // n-bar
  Factorization forced;    // the adjoined part, n-bar / u
  unsigned omega_cap = 0;
  bool forces_smaller_prime = false;
  bool forces_even_factor = false;
  int chi = 1;
  ChiReason reason = ChiReason::viable;
  std::vector<ChiReason> reasons;  // every obstruction found, in precedence order
};

inline constexpr unsigned kClosureRounds = 16;

inline VirtualAlpha make_virtual_alpha(const AlphaSeed& seed) {
  VirtualAlpha v;
  v.seed = seed;
  const PrimeMap u = detail::to_prime_map(seed.factors);
  const BigInt p_star = to_big(seed.generator.p_star);
  v.omega_cap = omega_cap(u, p_star, seed.bound);
  const BigInt ceiling = pow_big(to_big(seed.bound), 3);

  PrimeMap closure = u;
  PrimeMap sig = detail::sigma_map(closure);
  for (unsigned round = 0; round < kClosureRounds && detail::value_of(closure) <= ceiling; ++round) {
    const PrimeMap add = detail::extract_forced(sig, closure, v.omega_cap);
    if (add.empty()) break;
    closure.insert(add.begin(), add.end());
    sig = detail::sigma_map(closure);
  }

  PrimeMap adjoined;
  for (const auto& [q, e] : closure)
    if (!u.count(q)) adjoined[q] = e;
  v.value = detail::value_of(closure);
  v.forced = detail::to_factorization(adjoined);
  v.forces_even_factor = sig.count(2) > 0;
  v.forces_smaller_prime = !adjoined.empty() && adjoined.begin()->first < p_star;
  for (const auto& [q, e] : detail::extract_forced(sig, closure, v.omega_cap))
    if (q < p_star) v.forces_smaller_prime = true;
  return v;
}

struct ChiResult {
  int chi = 1;
  ChiReason reason = ChiReason::viable;
  std::vector<ChiReason> reasons;
};

/// chi = 0 when the virtual number forces an odd prime below p*, exceeds
/// the bound, or forces a factor of 2 (reported in that precedence).
inline ChiResult chi_alpha(const VirtualAlpha& v, std::uint64_t bound) {
  ChiResult r;
  if (v.forces_smaller_prime) r.reasons.push_back(ChiReason::forced_smaller_prime);
  if (v.value > to_big(bound)) r.reasons.push_back(ChiReason::exceeds_bound);
  if (v.forces_even_factor) r.reasons.push_back(ChiReason::forced_even_factor);
  if (!r.reasons.empty()) {
    r.chi = 0;
    r.reason = r.reasons.front();
  }
  return r;
}

inline VirtualAlpha evaluate_seed(const AlphaSeed& seed) {
  VirtualAlpha v = make_virtual_alpha(seed);
  ChiResult r = chi_alpha(v, seed.bound);
  v.chi = r.chi;
  v.reason = r.reason;
  v.reasons = std::move(r.reasons);
  return v;
}

// ---------------------------------------------------------------------------
// Odd strong search

struct SeedSearchStats {
  std::uint64_t generators = 0;
  std::uint64_t nodes = 0;
  std::uint64_t pruned_even_factor = 0;
  std::uint64_t pruned_smaller_prime = 0;
  std::uint64_t pruned_abundancy = 0;

  SeedSearchStats& operator+=(const SeedSearchStats& o) {
    generators += o.generators;
    nodes += o.nodes;
    pruned_even_factor += o.pruned_even_factor;
    pruned_smaller_prime += o.pruned_smaller_prime;
    pruned_abundancy += o.pruned_abundancy;
    return *this;
  }
};

struct SeedSearchResult {
  std::vector<AlphaRecord> records;
  SeedSearchStats stats;
};

namespace detail {

class OddStrongSearch {
 public:
  using u64 = std::uint64_t;

  OddStrongSearch(u64 bound, const std::vector<std::uint32_t>& primes) : bound_(bound), primes_(primes) {}

  // Searches every odd n <= bound whose least prime power is p^lambda.
  void run_generator(std::size_t prime_index, unsigned lambda) {
    ++stats.generators;
    const u64 p = primes_[prime_index];
    u64 pe = 1;
    for (unsigned i = 0; i < lambda; ++i) pe *= p;
    Node root;
    root.parts.push_back({p, lambda});
    root.value = pe;
    root.sigma = sigma_pp(p, lambda);
    root.sig_primes = sigma_pp_factors(p, lambda);
    visit(root, prime_index);
  }

  std::vector<u64> hits;
  SeedSearchStats stats;

 private:
  struct Node {
    std::vector<std::pair<u64, unsigned>> parts;
    u64 value = 1;
    u64 sigma = 1;
    std::map<u64, unsigned> sig_primes;  // factorization of sigma(value)
  };

  static u64 sigma_pp(u64 p, unsigned e) {
    u64 s = 1, pe = 1;
    for (unsigned i = 0; i < e; ++i) {
      pe *= p;
      s += pe;
    }
    return s;
  }

  const std::map<u64, unsigned>& sigma_pp_factors(u64 p, unsigned e) {
    const u64 key = p * 64 + e;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::map<u64, unsigned> m;
    const Factorization f = factorize_u64(sigma_pp(p, e));
    for (const auto& [q, k] : f.parts()) m[to_u64(q)] = k;
    return memo_.emplace(key, std::move(m)).first->second;
  }

  unsigned omega_cap_of(const Node& node, std::size_t last_index) const {
    unsigned k = 0;
    u64 u = node.value;
    for (std::size_t i = last_index + 1; i < primes_.size(); ++i) {
      if (static_cast<unsigned __int128>(u) * primes_[i] > bound_) break;
      u *= primes_[i];
      ++k;
    }
    return static_cast<unsigned>(node.parts.size()) + k;
  }

  void visit(const Node& node, std::size_t last_index) {
    ++stats.nodes;
    const u64 last = node.parts.back().first;
    const unsigned cap = omega_cap_of(node, last_index);

    // Primes of sigma(u) below the largest prime of u that u lacks can never
    // divide n, so they must divide alpha_1 <= omega(n) <= cap.
    u64 two_part = 1, absorbed = 1;
    for (const auto& [r, k] : node.sig_primes) {
      if (r >= last) break;
      if (std::any_of(node.parts.begin(), node.parts.end(), [r = r](const auto& pp) { return pp.first == r; }))
        continue;
      for (unsigned i = 0; i < k && absorbed <= cap; ++i) {
        absorbed *= r;
        if (r == 2) two_part *= 2;
      }
    }
    if (absorbed > cap) {
      ++(two_part > cap ? stats.pruned_even_factor : stats.pruned_smaller_prime);
      return;
    }
    // sigma(n)/n >= sigma(u)/u, and a strong ratio is at most omega(n).
    if (static_cast<unsigned __int128>(node.sigma) > static_cast<unsigned __int128>(node.value) * cap) {
      ++stats.pruned_abundancy;
      return;
    }
    if (node.parts.size() >= 2) {
      const u64 g = std::gcd(node.sigma, node.value);
      const u64 m = std::max(node.sigma / g, node.value / g);
      if (m >= 2 && m <= node.parts.size()) hits.push_back(node.value);
    }
    for (std::size_t i = last_index + 1; i < primes_.size(); ++i) {
      const u64 q = primes_[i];
      if (static_cast<unsigned __int128>(node.value) * q > bound_) break;
      u64 v = node.value * q;
      for (unsigned e = 1;; ++e) {
        Node child = node;
        child.parts.push_back({q, e});
        child.value = v;
        child.sigma = node.sigma * sigma_pp(q, e);
        for (const auto& [r, k] : sigma_pp_factors(q, e)) child.sig_primes[r] += k;
        visit(child, i);
        if (static_cast<unsigned __int128>(v) * q > bound_) break;
        v *= q;
      }
    }
  }

  u64 bound_;
  const std::vector<std::uint32_t>& primes_;
  std::unordered_map<u64, std::map<u64, unsigned>> memo_;
};

}  // namespace detail

/// Odd strong numbers of order (1,1) up to `bound`, by depth-first growth from
/// each odd generator p*^lambda*. Every pruning rule is necessary for a strong
/// n containing the node's prime powers exactly, so the result matches a full
/// sieve scan.
inline SeedSearchResult seed_search_odd(std::uint64_t bound, unsigned workers = 1) {
  if (bound < 9) throw std::invalid_argument("seed search bound must be at least 9");
  if (bound > kDefaultSieveCap) throw resource_error("seed search bound exceeds cap");
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p : detail::primes_below(static_cast<std::uint32_t>(bound / 3 + 2)))
    if (p != 2) primes.push_back(p);

  // Generators: p*^lambda* with room for at least one larger prime.
  std::vector<std::pair<std::size_t, unsigned>> gens;
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    const std::uint64_t p = primes[i], next = primes[i + 1];
    if (p * next > bound) break;
    std::uint64_t pe = p;
    for (unsigned lambda = 1; pe * next <= bound; ++lambda, pe *= p) gens.emplace_back(i, lambda);
  }

  workers = std::max(1u, workers);
  std::vector<std::future<std::pair<std::vector<std::uint64_t>, SeedSearchStats>>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [&, w] {
      detail::OddStrongSearch search(bound, primes);
      for (std::size_t g = w; g < gens.size(); g += workers) search.run_generator(gens[g].first, gens[g].second);
      return std::make_pair(std::move(search.hits), search.stats);
    }));
  }
  std::vector<std::uint64_t> hits;
  SeedSearchResult result;
  for (auto& j : jobs) {
    auto [h, s] = j.get();
    hits.insert(hits.end(), h.begin(), h.end());
    result.stats += s;
  }
  std::sort(hits.begin(), hits.end());
  for (std::uint64_t n : hits) result.records.push_back(make_record(factorize_u64(n), Order::integer(1, 1), Variant::exact));
  return result;
}

}  // namespace alphanum
