#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "bigint.hpp"
#include "divisors.hpp"
#include "factorization.hpp"
#include "quaternion.hpp"
#include "rational.hpp"
#include "sigma_general.hpp"

namespace alphanum {

enum class Verdict { Strong, Weak, VeryWeak, NotAlpha };
enum class Variant { exact, floored, ceiled };
enum class Exactness { exact_integer, floating };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Strong: return "Strong";
    case Verdict::Weak: return "Weak";
    case Verdict::VeryWeak: return "VeryWeak";
    case Verdict::NotAlpha: return "NotAlpha";
  }
  return "?";
}

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::exact: return "exact";
    case Variant::floored: return "floored";
    case Variant::ceiled: return "ceiled";
  }
  return "?";
}

namespace detail {
inline std::string fold(std::string s) {
  std::string out;
  for (char c : s)
    if (c != '-' && c != '_' && c != ' ') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}
}  // namespace detail

inline Verdict parse_verdict(const std::string& s) {
  const std::string k = detail::fold(s);
  if (k == "strong") return Verdict::Strong;
  if (k == "weak") return Verdict::Weak;
  if (k == "veryweak") return Verdict::VeryWeak;
  if (k == "notalpha") return Verdict::NotAlpha;
  throw std::invalid_argument("unknown class '" + s + "'");
}

inline Variant parse_variant(const std::string& s) {
  const std::string k = detail::fold(s);
  if (k == "exact") return Variant::exact;
  if (k == "floored" || k == "floor") return Variant::floored;
  if (k == "ceiled" || k == "ceiling") return Variant::ceiled;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

/// The pair (under, upper) in sigma_under(n) = ratio * n^upper.
struct Order {
  Quaternion under{1};
  Quaternion upper{1};
  Exactness exactness = Exactness::exact_integer;

  static Order integer(unsigned long under, unsigned long upper) {
    return {Quaternion(static_cast<double>(under)), Quaternion(static_cast<double>(upper)), Exactness::exact_integer};
  }

  /// Exact-integer when both parts are nonnegative real integers.
  static Order general(const Quaternion& under, const Quaternion& upper) {
    const bool exact = under.is_nonneg_integer() && upper.is_nonneg_integer();
    return {under, upper, exact ? Exactness::exact_integer : Exactness::floating};
  }

  bool is_exact() const { return exactness == Exactness::exact_integer; }
  unsigned long under_k() const { return require_int(under); }
  unsigned long upper_k() const { return require_int(upper); }

  std::string to_string() const { return to_literal(under) + "," + to_literal(upper); }

  friend bool operator==(const Order&, const Order&) = default;

 private:
  static unsigned long require_int(const Quaternion& q) {
    if (!q.is_nonneg_integer()) throw std::invalid_argument("order component is not a nonnegative integer");
    return static_cast<unsigned long>(q.a);
  }
};

/// Parses "a,b" into an exact-integer order.
inline Order parse_integer_order(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("order must look like 'a,b', got '" + s + "'");
  const BigInt a = parse_big(s.substr(0, comma));
  const BigInt b = parse_big(s.substr(comma + 1));
  if (!a.fits_ulong_p() || !b.fits_ulong_p() || a > 1000000 || b > 1000000)
    throw std::invalid_argument("order components too large in '" + s + "'");
  return Order::integer(a.get_ui(), b.get_ui());
}

struct Classification {
  Verdict verdict = Verdict::NotAlpha;
  ReducedRatio ratio;
  unsigned omega = 0;
  BigInt tau = 1;
  Variant variant = Variant::exact;
  bool boundary_flag = false;

  friend bool operator==(const Classification& a, const Classification& b) {
    return a.verdict == b.verdict && a.ratio == b.ratio && a.omega == b.omega && a.tau == b.tau &&
           a.variant == b.variant && a.boundary_flag == b.boundary_flag;
  }
};

/// Band placement of m = max(alpha1, alpha2):
///   Strong    2 <= m <= omega
///   Weak      2 <= omega < m <= tau
///   VeryWeak  2 <= tau < m < n
/// Works for BigInt and for plain unsigned integers.
template <class Int>
Verdict band_verdict(const Int& m, unsigned omega, const Int& tau, const Int& n) {
  const Int w = static_cast<Int>(omega);
  if (m >= 2 && m <= w) return Verdict::Strong;
  if (omega >= 2 && w < m && m <= tau) return Verdict::Weak;
  if (tau >= 2 && tau < m && m < n) return Verdict::VeryWeak;
  return Verdict::NotAlpha;
}

/// sigma(n)/n in lowest terms.
inline ReducedRatio alpha_ratio(const Factorization& f) { return reduce_ratio(sigma(f), f.n()); }

/// Exact classification for an integer order: reduces sigma_under(n) / n^upper.
inline Classification classify_exact(const Factorization& f, const Order& order) {
  if (!order.is_exact()) throw std::invalid_argument("classify_exact needs an exact-integer order");
  const DivisorStats st = divisor_stats(f);
  Classification c;
  c.ratio = reduce_ratio(sigma_k_exact(f, order.under_k()), pow_big(f.n(), order.upper_k()));
  c.omega = st.omega;
  c.tau = st.tau;
  c.variant = Variant::exact;
  c.verdict = band_verdict<BigInt>(c.ratio.max_term(), c.omega, c.tau, f.n());
  return c;
}

/// Floored/ceiled classification: the ratio of the rounded moduli of
/// sigma_under(n) and n^upper.
inline Classification classify_rounded(const Factorization& f, const Order& order, RoundMode mode,
                                       const Precision& prec = {}) {
  const RoundedModulus top = rounded_modulus(sigma_general(f, order.under, prec), mode, prec);
  const RoundedModulus bottom = rounded_modulus(integer_pow_quat(f.n(), order.upper, prec), mode, prec);
  if (sgn(bottom.value) == 0) throw std::domain_error("rounded modulus of n^upper is zero");
  const DivisorStats st = divisor_stats(f);
  Classification c;
  c.ratio = reduce_ratio(top.value, bottom.value);
  c.omega = st.omega;
  c.tau = st.tau;
  c.variant = mode == RoundMode::floor ? Variant::floored : Variant::ceiled;
  c.boundary_flag = top.boundary || bottom.boundary;
  c.verdict = band_verdict<BigInt>(c.ratio.max_term(), c.omega, c.tau, f.n());
  return c;
}

inline Classification classify(const Factorization& f, const Order& order, Variant variant,
                               const Precision& prec = {}) {
  switch (variant) {
    case Variant::exact: return classify_exact(f, order);
    case Variant::floored: return classify_rounded(f, order, RoundMode::floor, prec);
    case Variant::ceiled: return classify_rounded(f, order, RoundMode::ceiling, prec);
  }
  throw std::logic_error("unreachable");
}

/// sigma_under(n) * (n^upper)^-1; every n has one.
inline Quaternion partial_alpha(const Factorization& f, const Order& order, const Precision& prec = {}) {
  return quat_div(sigma_general(f, order.under, prec), integer_pow_quat(f.n(), order.upper, prec));
}

inline constexpr double kExpEulerGamma = 1.7810724179901979;  // e^gamma

struct RatioBound {
  double ratio = 0;
  double bound = 0;
  bool ok = false;
};

/// sigma(n)/n against e^gamma ln ln n + 0.6483 / ln ln n, which bounds n/phi(n)
/// for n >= 3 and therefore the abundancy.
inline RatioBound ratio_bound_check(const Factorization& f) {
  if (f.n() < 3) throw std::invalid_argument("ratio bound needs n >= 3");
  const double lln = std::log(log_big(f.n()));
  RatioBound r;
  r.ratio = mpq_class(sigma(f), f.n()).get_d();
  r.bound = kExpEulerGamma * lln + 0.6483 / lln;
  r.ok = r.ratio < r.bound;
  return r;
}

/// sigma(n) / (n ln ln phi(n)); undefined (nullopt) while phi(n) < 3.
inline std::optional<double> totient_loglog_quotient(const Factorization& f) {
  const BigInt phi = divisor_stats(f).phi;
  if (phi < 3) return std::nullopt;
  return mpq_class(sigma(f), f.n()).get_d() / std::log(log_big(phi));
}

}  // namespace alphanum
