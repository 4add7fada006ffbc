#pragma once

#include "classify.hpp"
#include "factorization.hpp"

namespace alphanum {

/// One classified integer, the unit of enumeration and report output.
struct AlphaRecord {
  BigInt n;
  Factorization factorization;
  BigInt sigma;  // sigma_under(n) for exact orders, its rounded modulus otherwise
  ReducedRatio ratio;
  Classification classification;
  Order order;
  Variant variant = Variant::exact;

  friend bool operator==(const AlphaRecord& a, const AlphaRecord& b) {
    return a.n == b.n && a.factorization == b.factorization && a.sigma == b.sigma && a.ratio == b.ratio &&
           a.classification == b.classification && a.order == b.order && a.variant == b.variant;
  }
};

inline AlphaRecord make_record(const Factorization& f, const Order& order, Variant variant,
                               const Precision& prec = {}) {
  AlphaRecord r;
  r.n = f.n();
  r.factorization = f;
  r.order = order;
  r.variant = variant;
  r.classification = classify(f, order, variant, prec);
  r.ratio = r.classification.ratio;
  if (variant == Variant::exact) {
    r.sigma = sigma_k_exact(f, order.under_k());
  } else {
    const RoundMode mode = variant == Variant::floored ? RoundMode::floor : RoundMode::ceiling;
    r.sigma = rounded_modulus(sigma_general(f, order.under, prec), mode, prec).value;
  }
  return r;
}

}  // namespace alphanum
