#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace alphanum {

using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == 8, "LP64 platform expected");
  return BigInt(static_cast<unsigned long>(v));
}

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline BigInt parse_big(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a nonnegative decimal integer: '" + s + "'");
  return BigInt(s, 10);
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt gcd_big(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Natural log of a positive big integer without overflowing double.
inline double log_big(const BigInt& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * 0.69314718055994530942;
}

}  // namespace alphanum
