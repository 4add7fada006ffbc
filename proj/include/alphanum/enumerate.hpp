#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <set>
#include <vector>

#include "classify.hpp"
#include "records.hpp"
#include "sieve.hpp"

namespace alphanum {

enum class Parity { odd, even, all };

inline Parity parse_parity(const std::string& s) {
  const std::string k = detail::fold(s);
  if (k == "odd") return Parity::odd;
  if (k == "even") return Parity::even;
  if (k == "all") return Parity::all;
  throw std::invalid_argument("unknown parity '" + s + "'");
}

inline std::string to_string(Parity p) {
  return p == Parity::odd ? "odd" : p == Parity::even ? "even" : "all";
}

inline bool parity_matches(std::uint64_t n, Parity p) {
  return p == Parity::all || (p == Parity::odd) == (n % 2 == 1);
}

using VerdictSet = std::set<Verdict>;

struct EnumerateOptions {
  Variant variant = Variant::exact;
  Precision precision;
  std::uint64_t sieve_cap = kDefaultSieveCap;
  unsigned workers = 1;
};

/// Per-n verdicts over a shared sieve. Order (1,1) with the exact variant
/// runs entirely in 64-bit arithmetic off the sigma_1 table.
class RangeClassifier {
 public:
  RangeClassifier(const SieveTable& sieve, Order order, const EnumerateOptions& opts)
      : sieve_(sieve), order_(std::move(order)), opts_(opts) {
    if (opts_.variant == Variant::exact && !order_.is_exact())
      throw std::invalid_argument("exact enumeration needs an exact-integer order");
    fast_ = opts_.variant == Variant::exact && order_ == Order::integer(1, 1);
  }

  Verdict verdict(std::uint64_t n) const {
    if (!fast_) return classify(sieve_.factorization(n), order_, opts_.variant, opts_.precision).verdict;
    const std::uint64_t s = sieve_.sigma1(n);
    const std::uint64_t g = std::gcd(s, n);
    const std::uint64_t m = std::max(s / g, n / g);
    if (m < 2 || m >= n) return Verdict::NotAlpha;
    unsigned omega = 0;
    std::uint64_t tau = 1;
    for (auto [p, e] : sieve_.small_factors(n)) {
      ++omega;
      tau *= e + 1;
    }
    return band_verdict<std::uint64_t>(m, omega, tau, n);
  }

  AlphaRecord record(std::uint64_t n) const {
    return make_record(sieve_.factorization(n), order_, opts_.variant, opts_.precision);
  }

 private:
  const SieveTable& sieve_;
  Order order_;
  EnumerateOptions opts_;
  bool fast_ = false;
};

/// Records for lo <= n < hi (clamped to [1, sieve bound]), ascending.
inline std::vector<AlphaRecord> enumerate_range(const SieveTable& sieve, std::uint64_t lo, std::uint64_t hi,
                                                const Order& order, const VerdictSet& classes, Parity parity,
                                                const EnumerateOptions& opts = {}) {
  RangeClassifier rc(sieve, order, opts);
  std::vector<AlphaRecord> out;
  lo = std::max<std::uint64_t>(lo, 1);
  hi = std::min<std::uint64_t>(hi, sieve.bound() + 1);
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (!parity_matches(n, parity)) continue;
    if (classes.count(rc.verdict(n))) out.push_back(rc.record(n));
  }
  return out;
}

namespace detail {
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t lo, std::uint64_t hi,
                                                                        unsigned parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  parts = std::max(1u, parts);
  const std::uint64_t len = hi > lo ? hi - lo : 0;
  for (unsigned i = 0; i < parts; ++i) {
    std::uint64_t a = lo + len * i / parts, b = lo + len * (i + 1) / parts;
    if (a < b) out.emplace_back(a, b);
  }
  return out;
}
}  // namespace detail

/// Every n in [1, bound] whose verdict is in `classes`, ascending by n.
inline std::vector<AlphaRecord> enumerate_alpha(std::uint64_t bound, const Order& order, const VerdictSet& classes,
                                                Parity parity, const EnumerateOptions& opts = {}) {
  const SieveTable sieve = build_sieve(bound, opts.sieve_cap);
  std::vector<std::future<std::vector<AlphaRecord>>> jobs;
  for (auto [a, b] : detail::split_range(1, bound + 1, opts.workers)) {
    jobs.push_back(std::async(opts.workers > 1 ? std::launch::async : std::launch::deferred,
                              [&, a = a, b = b] { return enumerate_range(sieve, a, b, order, classes, parity, opts); }));
  }
  std::vector<AlphaRecord> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

struct ClassCounts {
  std::uint64_t strong = 0;
  std::uint64_t weak = 0;
  std::uint64_t very_weak = 0;
  std::uint64_t not_alpha = 0;

  std::uint64_t of(Verdict v) const {
    switch (v) {
      case Verdict::Strong: return strong;
      case Verdict::Weak: return weak;
      case Verdict::VeryWeak: return very_weak;
      case Verdict::NotAlpha: return not_alpha;
    }
    return 0;
  }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Per-band counts over n in [1, bound] with matching parity.
inline ClassCounts count_alpha(std::uint64_t bound, const Order& order, Parity parity,
                               const EnumerateOptions& opts = {}) {
  const SieveTable sieve = build_sieve(bound, opts.sieve_cap);
  RangeClassifier rc(sieve, order, opts);
  ClassCounts c;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (!parity_matches(n, parity)) continue;
    switch (rc.verdict(n)) {
      case Verdict::Strong: ++c.strong; break;
      case Verdict::Weak: ++c.weak; break;
      case Verdict::VeryWeak: ++c.very_weak; break;
      case Verdict::NotAlpha: ++c.not_alpha; break;
    }
  }
  return c;
}

}  // namespace alphanum
