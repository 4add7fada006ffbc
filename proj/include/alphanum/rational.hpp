#pragma once

#include <stdexcept>
#include <string>

#include "bigint.hpp"

namespace alphanum {

/// num/den in lowest terms, den >= 1. Zero normalizes to 0/1.
class ReducedRatio {
 public:
  ReducedRatio() : num_(0), den_(1) {}
  ReducedRatio(const BigInt& num, const BigInt& den) : num_(num), den_(den) {
    if (sgn(den_) == 0) throw std::invalid_argument("ratio denominator must be nonzero");
    if (sgn(num_) < 0 || sgn(den_) < 0) throw std::invalid_argument("ratio terms must be nonnegative");
    BigInt g = gcd_big(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  const BigInt& max_term() const { return num_ > den_ ? num_ : den_; }
  double to_double() const { return mpq_class(num_, den_).get_d(); }
  std::string to_string() const { return num_.get_str() + "/" + den_.get_str(); }

  friend bool operator==(const ReducedRatio& a, const ReducedRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  BigInt num_;
  BigInt den_;
};

inline ReducedRatio reduce_ratio(const BigInt& num, const BigInt& den) { return ReducedRatio(num, den); }

}  // namespace alphanum
