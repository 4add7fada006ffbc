#pragma once

#include <cctype>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace alphanum {

/// a + b i + c j + d k. Complex numbers are the c = d = 0 slice.
struct Quaternion {
  double a = 0, b = 0, c = 0, d = 0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : a(re) {}  // NOLINT: implicit from real is intended
  constexpr Quaternion(double a_, double b_, double c_ = 0, double d_ = 0) : a(a_), b(b_), c(c_), d(d_) {}

  bool is_real() const { return b == 0 && c == 0 && d == 0; }
  bool is_complex() const { return c == 0 && d == 0; }
  bool is_finite() const { return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d); }

  /// Real, integral and >= 0.
  bool is_nonneg_integer() const { return is_real() && a >= 0 && std::floor(a) == a && a < 9.0e15; }

  double norm() const { return std::hypot(std::hypot(a, b), std::hypot(c, d)); }
  double vector_norm() const { return std::hypot(b, std::hypot(c, d)); }
  Quaternion conj() const { return {a, -b, -c, -d}; }

  Quaternion inverse() const {
    const double n2 = a * a + b * b + c * c + d * d;
    if (n2 == 0) throw std::domain_error("inverse of zero quaternion");
    return {a / n2, -b / n2, -c / n2, -d / n2};
  }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator*(double s, const Quaternion& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  Quaternion& operator+=(const Quaternion& y) { return *this = *this + y; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
inline Quaternion quat_mul(const Quaternion& x, const Quaternion& y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

inline Quaternion operator*(const Quaternion& x, const Quaternion& y) { return quat_mul(x, y); }

/// x * y^-1.
inline Quaternion quat_div(const Quaternion& x, const Quaternion& y) { return quat_mul(x, y.inverse()); }

/// exp(a + v) = e^a (cos|v| + v/|v| sin|v|).
inline Quaternion quat_exp(const Quaternion& q) {
  const double ea = std::exp(q.a);
  const double vn = q.vector_norm();
  if (vn == 0) return {ea};
  const double s = ea * std::sin(vn) / vn;
  return {ea * std::cos(vn), s * q.b, s * q.c, s * q.d};
}

/// Floating tolerance policy: eps_rel bounds arithmetic error claims,
/// boundary_eps is the relative distance to an integer below which a
/// floor/ceiling is considered ambiguous and snapped.
struct Precision {
  double eps_rel = 1e-12;
  double boundary_eps = 1e-9;

  Precision() = default;
  Precision(double rel, double boundary) : eps_rel(rel), boundary_eps(boundary) { validate(); }

  void validate() const {
    if (!(0 < eps_rel && eps_rel < boundary_eps && boundary_eps < 1))
      throw std::invalid_argument("precision requires 0 < eps_rel < boundary_eps < 1");
  }
};

/// base^x := exp(x ln base). Real exponents go through std::pow, which is
/// exact for small integral results.
inline Quaternion real_pow_quat(double base, const Quaternion& x, const Precision& = {}) {
  if (!(base > 0) || !std::isfinite(base)) throw std::domain_error("real_pow_quat: base must be positive");
  if (!x.is_finite()) throw std::domain_error("real_pow_quat: exponent must be finite");
  Quaternion r = x.is_real() ? Quaternion(std::pow(base, x.a)) : quat_exp(std::log(base) * x);
  if (!r.is_finite()) throw std::overflow_error("real_pow_quat: result is not finite");
  return r;
}

inline std::string format_double(double v, int digits = 17) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

/// Canonical literal: "R", "a+bi", or "a+bi+cj+dk" (trailing zero parts dropped).
inline std::string to_literal(const Quaternion& q, int digits = 17) {
  std::ostringstream os;
  os << format_double(q.a, digits);
  auto term = [&](double v, char unit) {
    os << (std::signbit(v) ? "-" : "+") << format_double(std::fabs(v), digits) << unit;
  };
  if (!q.is_real()) term(q.b, 'i');
  if (!q.is_complex()) {
    term(q.c, 'j');
    term(q.d, 'k');
  }
  return os.str();
}

/// Parses "R", "a+bi", "a+bi+cj+dk" and permutations/omissions of the terms,
/// e.g. "i", "0.5-2i", "1+j". Throws std::invalid_argument on junk.
inline Quaternion parse_quaternion(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty quaternion literal");
  Quaternion q;
  bool seen[4] = {false, false, false, false};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    if (start > 0 && text[start] != '+' && text[start] != '-')
      throw std::invalid_argument("bad quaternion literal '" + text + "'");
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                                 ((text[pos] == 'e' || text[pos] == 'E') && pos + 1 < text.size() &&
                                  (std::isdigit(static_cast<unsigned char>(text[pos + 1])) ||
                                   text[pos + 1] == '-' || text[pos + 1] == '+')))) {
      if (text[pos] == 'e' || text[pos] == 'E') ++pos;
      ++pos;
    }
    double mag = 1.0;
    if (pos > num_begin) {
      std::size_t used = 0;
      const std::string num = text.substr(num_begin, pos - num_begin);
      try {
        mag = std::stod(num, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad quaternion literal '" + text + "'");
      }
      if (used != num.size()) throw std::invalid_argument("bad quaternion literal '" + text + "'");
    }
    int slot = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      slot = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (pos == num_begin) {
      throw std::invalid_argument("bad quaternion literal '" + text + "'");
    }
    if (seen[slot]) throw std::invalid_argument("repeated component in '" + text + "'");
    seen[slot] = true;
    const double v = text[start] == '-' ? -mag : mag;
    (slot == 0 ? q.a : slot == 1 ? q.b : slot == 2 ? q.c : q.d) = v;
  }
  if (!q.is_finite()) throw std::invalid_argument("non-finite quaternion literal '" + text + "'");
  return q;
}

}  // namespace alphanum
