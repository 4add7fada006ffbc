#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "divisors.hpp"
#include "factorization.hpp"
#include "quaternion.hpp"

namespace alphanum {

namespace detail {

// Divisors as doubles, ascending. Exact while n < 2^53.
inline std::vector<double> divisors_double(const Factorization& f, std::uint64_t cap) {
  check_divisor_cap(f, cap);
  std::vector<double> divs{1.0};
  for (const auto& [p, e] : f.parts()) {
    const double pd = p.get_d();
    const std::size_t base = divs.size();
    double pe = 1.0;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= pd;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

/// sigma_x(n) = sum over divisors d of d^x, for any quaternion x.
inline Quaternion sigma_general(const Factorization& f, const Quaternion& x, const Precision& prec = {},
                                std::uint64_t cap = kDefaultDivisorCap) {
  if (!x.is_finite()) throw std::domain_error("sigma_general: exponent must be finite");
  Quaternion sum;
  for (double d : detail::divisors_double(f, cap)) sum += real_pow_quat(d, x, prec);
  if (!sum.is_finite()) throw std::overflow_error("sigma_general: result is not finite");
  return sum;
}

/// n^x for a positive integer n.
inline Quaternion integer_pow_quat(const BigInt& n, const Quaternion& x, const Precision& prec = {}) {
  const double nd = n.get_d();
  if (std::isfinite(nd)) return real_pow_quat(nd, x, prec);
  // n beyond double range: go through the logarithm directly.
  Quaternion r = quat_exp(log_big(n) * x);
  if (!r.is_finite()) throw std::overflow_error("integer_pow_quat: result is not finite");
  return r;
}

enum class RoundMode { floor, ceiling };

struct RoundedModulus {
  BigInt value;
  bool boundary = false;  // |v| was within boundary_eps of an integer and got snapped
};

/// floor(|v|) or ceil(|v|). When |v| lies within boundary_eps * max(1, |v|) of
/// an integer k (but is not exactly k) the result is k and `boundary` is set.
inline RoundedModulus rounded_modulus(const Quaternion& v, RoundMode mode, const Precision& prec = {}) {
  if (!v.is_finite()) throw std::domain_error("rounded_modulus: non-finite value");
  const double m = v.norm();
  const double nearest = std::nearbyint(m);
  const double tol = prec.boundary_eps * std::max(1.0, m);
  RoundedModulus r;
  if (m == nearest) {
    r.value = BigInt(nearest);
  } else if (std::fabs(m - nearest) <= tol) {
    r.value = BigInt(nearest);
    r.boundary = true;
  } else {
    r.value = BigInt(mode == RoundMode::floor ? std::floor(m) : std::ceil(m));
  }
  return r;
}

}  // namespace alphanum
