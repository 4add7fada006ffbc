#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "divisors.hpp"
#include "enumerate.hpp"
#include "seeds.hpp"
#include "sigma_general.hpp"

namespace alphanum {

enum class AuditStatus { verified, mismatch };

inline std::string to_string(AuditStatus s) { return s == AuditStatus::verified ? "verified" : "mismatch"; }

inline AuditStatus parse_audit_status(const std::string& s) {
  if (s == "verified") return AuditStatus::verified;
  if (s == "mismatch") return AuditStatus::mismatch;
  throw std::invalid_argument("unknown audit status '" + s + "'");
}

/// One reference row next to its recomputation. Computed values are the
/// ground truth; the row is never corrected in place, only flagged.
struct AuditRow {
  std::string table_id;
  std::string row;
  std::map<std::string, std::string> claimed;
  std::map<std::string, std::string> computed;
  AuditStatus status = AuditStatus::verified;
  std::string discrepancy;

  friend bool operator==(const AuditRow&, const AuditRow&) = default;
};

inline bool any_mismatch(const std::vector<AuditRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.status == AuditStatus::mismatch; });
}

inline constexpr double kAuditRealTolerance = 1e-3;
inline constexpr std::uint64_t kAuditBound = 100000;

namespace detail {

class RowBuilder {
 public:
  RowBuilder(std::string table, std::string row) {
    row_.table_id = std::move(table);
    row_.row = std::move(row);
  }

  void exact(const std::string& key, const std::string& claimed, const std::string& computed) {
    row_.claimed[key] = claimed;
    row_.computed[key] = computed;
    if (claimed != computed) note(key + ": printed " + claimed + ", computed " + computed);
  }

  void real(const std::string& key, double claimed, double computed, double tol = kAuditRealTolerance) {
    row_.claimed[key] = fixed(claimed);
    row_.computed[key] = fixed(computed);
    if (std::abs(claimed - computed) > tol) note(key + ": printed " + fixed(claimed) + ", computed " + fixed(computed));
  }

  // Printed value only needs to be part of the computed one.
  void contained(const std::string& key, const std::string& claimed, const std::string& computed, bool ok) {
    row_.claimed[key] = claimed;
    row_.computed[key] = computed;
    if (!ok) {
      note(key + ": printed " + claimed + " not within computed " + computed);
    } else if (claimed != computed) {
      append(key + ": printed " + (claimed.empty() ? "nothing" : claimed) + ", computed " + computed);
    }
  }

  // Computed-only context; never affects the status.
  void extra(const std::string& key, const std::string& computed) { row_.computed[key] = computed; }

  void fail(const std::string& why) { note(why); }

  AuditRow done() { return std::move(row_); }

  static std::string fixed(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    std::string s = os.str();
    return s == "-0.0000" ? "0.0000" : s;
  }

 private:
  void note(const std::string& text) {
    row_.status = AuditStatus::mismatch;
    append(text);
  }
  void append(const std::string& text) {
    if (!row_.discrepancy.empty()) row_.discrepancy += "; ";
    row_.discrepancy += text;
  }

  AuditRow row_;
};

struct DivisorSumClaim {
  unsigned n, tau, s1, s2;
  double s_half, s_i_re, s_i_im;
  unsigned floor_half, floor_i;
};

inline const std::vector<DivisorSumClaim>& divisor_sum_claims() {
  static const std::vector<DivisorSumClaim> rows{
      {1, 1, 1, 1, 1, 1, 0, 1, 1},
      {2, 2, 3, 5, 2.4142, 1.7692, 0.6390, 2, 1},
      {3, 2, 4, 10, 2.7321, 1.4548, 0.8906, 2, 1},
      {4, 3, 7, 21, 4.4142, 1.9527, 1.6220, 4, 2},
      {5, 2, 6, 26, 3.2361, 0.9614, 0.9993, 3, 1},
      {6, 4, 12, 50, 6.5959, 2.0049, 2.5052, 6, 3},
      {7, 2, 8, 50, 3.6458, 0.6336, 0.9305, 3, 1},
      {8, 4, 15, 85, 7.2426, 1.466, 2.4954, 7, 2},
      {9, 3, 13, 91, 5.7321, 0.8686, 1.7007, 5, 1},
      {10, 4, 18, 130, 7.8126, 1.0624, 2.3822, 7, 2},
      {24, 8, 60, 850, 19.787, -0.0899, 4.936, 19, 4},
      {25, 3, 31, 651, 8.236, -0.0356, 0.922, 8, 0},
      {26, 4, 42, 850, 11.118, -0.0623, 1.068, 11, 1},
      {27, 4, 40, 820, 10.928, -0.1200, 1.547, 10, 1},
      {28, 6, 56, 1050, 16.03, -0.2719, 2.845, 16, 2},
      {29, 2, 30, 842, 6.385, 0.0025, -0.224, 6, 0},
      {30, 8, 72, 1300, 21.344, -0.5759, 4.412, 21, 4},
  };
  return rows;
}

struct RatioClaim {
  std::string n, factorization, sigma, alpha1, alpha2;
  unsigned omega;
  std::string tau;  // empty when the table has no divisor-count column
};

inline const std::vector<RatioClaim>& strong_example_claims() {
  static const std::vector<RatioClaim> rows{
      {"6", "2*3", "12", "2", "1", 2, ""},
      {"28", "2^2*7", "56", "2", "1", 2, ""},
      {"523776", "2^9*3*11*31", "1571328", "3", "1", 4, ""},
      {"707840", "2^8*5*7*79", "1962240", "3", "1", 4, ""},
  };
  return rows;
}

inline const std::vector<RatioClaim>& weak_example_claims() {
  static const std::vector<RatioClaim> rows{
      {"24", "2^3*3", "60", "5", "2", 2, "8"},
      {"11172", "2^2*3*7^2*19", "31920", "20", "7", 4, "36"},
      {"544635", "3^2*5*7^2*13*19", "1244860", "16", "7", 5, "72"},
      {"931095", "3^4*5*11^2*19", "1931160", "56", "27", 4, "60"},
      {"6517665", "3^4*5*7*11^2*19", "15449280", "64", "27", 5, "120"},
  };
  return rows;
}

inline const std::vector<RatioClaim>& even_strong_claims() {
  static const std::vector<RatioClaim> rows{
      {"6", "2*3", "12", "2", "1", 2, ""},
      {"28", "2^2*7", "56", "2", "1", 2, ""},
      {"120", "2^3*3*5", "360", "3", "1", 3, ""},
      {"496", "2^4*31", "992", "2", "1", 2, ""},
      {"672", "2^5*3*7", "2016", "3", "1", 3, ""},
      {"1090", "2^3*3*5*7*13", "40320", "4", "1", 5, ""},
      {"8128", "2^6*127", "16256", "2", "1", 2, ""},
      {"30240", "2^5*3^3*5*7", "120960", "4", "1", 4, ""},
      {"32760", "2^3*3^2*13*7*5", "131040", "4", "1", 5, ""},
  };
  return rows;
}

struct PrimePowerSigmaClaim {
  unsigned p, e;
  std::string sigma_factors;
};

inline const std::vector<PrimePowerSigmaClaim>& prime_power_sigma_claims() {
  static const std::vector<PrimePowerSigmaClaim> rows{
      {3, 7, "2^4*541"}, {3, 6, "1093"},     {3, 5, "2^2*7*13"}, {3, 4, "11^2"},      {3, 3, "2^3*5"},
      {3, 2, "13"},      {5, 5, "3^3*7*31"}, {5, 4, "11*71"},    {5, 3, "2^2*3*13"},  {5, 2, "31"},
      {7, 4, "2801"},    {7, 3, "2^4*5^2"},  {7, 2, "3*19"},     {11, 2, "7*19"},     {13, 3, "2*5*7*17"},
      {13, 2, "3*61"},   {19, 2, "3*127"},   {31, 2, "3*331"},
  };
  return rows;
}

struct GeneratorCapClaim {
  std::uint64_t p_star;
  unsigned lambda_cap, omega_cap;
};

inline const std::vector<GeneratorCapClaim>& generator_cap_claims() {
  static const std::vector<GeneratorCapClaim> rows{{3, 7, 3}, {5, 4, 3}, {7, 3, 3}, {11, 2, 3}, {13, 2, 3}};
  return rows;
}

struct SeedSetClaim {
  Generator generator;
  std::vector<std::string> seeds;
};

inline const std::vector<SeedSetClaim>& seed_set_claims() {
  static const std::vector<SeedSetClaim> rows{
      {{3, 7}, {}},
      {{3, 6}, {}},
      {{3, 5}, {"3^5*7*13"}},
      {{3, 4}, {}},
      {{3, 3}, {"3^3*5", "3^3*5^2", "3^3*5^3", "3^3*5^4", "3^3*5^5"}},
      {{3, 2}, {"3^2*13*7", "3^2*13*7^2", "3^2*13*7^3", "3^2*13^2*7", "3^2*13^2*7^2"}},
      {{5, 4}, {}},
      {{5, 3}, {"5^3*13*7", "5^3*13*7^2"}},
      {{5, 2}, {"5^2*31", "5^2*31^2"}},
      {{7, 3}, {}},
      {{7, 2}, {}},
      {{11, 2}, {}},
      {{13, 2}, {}},
  };
  return rows;
}

struct VirtualAlphaClaim {
  std::string seed;
  std::string forced;   // printed product of forced factors, empty if not printed
  bool exceeds;         // printed as "> bound"
  bool even;            // printed as m > 0
};

inline const std::vector<VirtualAlphaClaim>& virtual_alpha_claims() {
  static const std::vector<VirtualAlphaClaim> rows{
      {"3^5*7*13", "", false, true},
      {"3^3*5", "", false, true},
      {"3^3*5^2", "", false, true},
      {"3^3*5^3", "", false, true},
      {"3^3*5^4", "11*71", true, true},
      {"3^3*5^5", "7*31", true, true},
      {"3^2*13*7", "", false, true},
      {"3^2*13*7^2", "", false, true},
      {"3^2*13*7^3", "5^2*31", true, true},
      {"3^2*13^2*7", "61*31", true, true},
      {"3^2*13^2*7^2", "19*61*5", true, true},
      {"5^3*13*7", "", false, true},
      {"5^3*13*7^2", "19", true, true},
      {"5^2*31", "", false, true},
      {"5^2*31^2", "331*83", true, false},
  };
  return rows;
}

inline std::string canonical(const std::string& factors) { return Factorization::parse(factors).to_string(); }

inline std::string join(const std::vector<std::string>& items, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

inline std::vector<AuditRow> audit_divisor_sums() {
  std::vector<AuditRow> out;
  const Precision prec;
  for (const auto& c : divisor_sum_claims()) {
    RowBuilder b("divisor-sums", std::to_string(c.n));
    const Factorization f = factorize_u64(c.n);
    b.exact("tau", std::to_string(c.tau), to_string(sigma_k_exact(f, 0)));
    b.exact("sigma1", std::to_string(c.s1), to_string(sigma_k_exact(f, 1)));
    b.exact("sigma2", std::to_string(c.s2), to_string(sigma_k_exact(f, 2)));
    const Quaternion half = sigma_general(f, Quaternion(0.5), prec);
    const Quaternion imag = sigma_general(f, Quaternion(0, 1, 0, 0), prec);
    b.real("sigma_half", c.s_half, half.a);
    b.real("sigma_i_re", c.s_i_re, imag.a);
    b.real("sigma_i_im", c.s_i_im, imag.b);
    b.exact("floor_abs_sigma_half", std::to_string(c.floor_half),
            to_string(rounded_modulus(half, RoundMode::floor, prec).value));
    b.exact("floor_abs_sigma_i", std::to_string(c.floor_i),
            to_string(rounded_modulus(imag, RoundMode::floor, prec).value));
    out.push_back(b.done());
  }
  return out;
}

inline AuditRow audit_ratio_row(const std::string& table, const RatioClaim& c, Verdict expected) {
  RowBuilder b(table, c.n);
  const Factorization printed = Factorization::parse(c.factorization);
  const Factorization f = factorize(parse_big(c.n));
  const Classification k = classify_exact(f, Order::integer(1, 1));
  b.exact("factorization", canonical(c.factorization), f.to_string());
  b.exact("sigma", c.sigma, to_string(sigma(f)));
  b.exact("alpha1", c.alpha1, to_string(k.ratio.num()));
  b.exact("alpha2", c.alpha2, to_string(k.ratio.den()));
  b.exact("omega", std::to_string(c.omega), std::to_string(k.omega));
  if (!c.tau.empty()) b.exact("tau", c.tau, to_string(k.tau));
  b.exact("verdict", to_string(expected), to_string(k.verdict));
  if (printed.n() != f.n()) {
    const Classification alt = classify_exact(printed, Order::integer(1, 1));
    b.extra("factorization_product", to_string(printed.n()));
    b.extra("factorization_product_sigma", to_string(sigma(printed)));
    b.extra("factorization_product_ratio", alt.ratio.to_string());
    b.extra("factorization_product_verdict", to_string(alt.verdict));
    b.fail("printed factorization multiplies to " + to_string(printed.n()) + " (sigma " + to_string(sigma(printed)) +
             ", ratio " + alt.ratio.to_string() + ", " + to_string(alt.verdict) + ")");
  }
  return b.done();
}

inline std::vector<AuditRow> audit_ratio_table(const std::string& table, const std::vector<RatioClaim>& claims,
                                               Verdict expected) {
  std::vector<AuditRow> out;
  for (const auto& c : claims) out.push_back(audit_ratio_row(table, c, expected));
  return out;
}

inline AuditRow audit_even_strong_completeness() {
  RowBuilder b("even-strong-list", "complete-list");
  std::vector<std::string> printed, computed;
  for (const auto& c : even_strong_claims()) printed.push_back(c.n);
  for (const auto& r : enumerate_alpha(kAuditBound, Order::integer(1, 1), {Verdict::Strong}, Parity::even))
    computed.push_back(to_string(r.n));
  b.exact("members", join(printed), join(computed));
  return b.done();
}

inline std::vector<AuditRow> audit_prime_power_sigmas() {
  std::vector<AuditRow> out;
  for (const auto& c : prime_power_sigma_claims()) {
    RowBuilder b("prime-power-sigmas", std::to_string(c.p) + "^" + std::to_string(c.e));
    const BigInt s = sigma_k_prime_power(to_big(c.p), c.e, 1);
    b.exact("sigma", canonical(c.sigma_factors), factorize(s).to_string());
    b.extra("sigma_value", to_string(s));
    out.push_back(b.done());
  }
  return out;
}

inline std::vector<AuditRow> audit_generator_caps() {
  std::vector<AuditRow> out;
  const auto table = generator_table(kAuditBound);
  std::vector<std::string> printed, computed;
  for (const auto& c : generator_cap_claims()) {
    printed.push_back(std::to_string(c.p_star));
    RowBuilder b("generator-caps", std::to_string(c.p_star));
    auto it = std::find_if(table.begin(), table.end(), [&](const GeneratorRow& g) { return g.p_star == c.p_star; });
    if (it == table.end()) {
      b.fail("not a generator prime at this bound");
    } else {
      b.exact("lambda_cap", std::to_string(c.lambda_cap), std::to_string(it->lambda_cap));
      b.exact("omega_cap", std::to_string(c.omega_cap), std::to_string(it->omega_cap));
    }
    out.push_back(b.done());
  }
  for (const auto& g : table) computed.push_back(std::to_string(g.p_star));
  RowBuilder b("generator-caps", "generator-primes");
  b.exact("primes", join(printed), join(computed));
  out.push_back(b.done());
  return out;
}

inline std::vector<AuditRow> audit_seed_sets() {
  std::vector<AuditRow> out;
  for (const auto& c : seed_set_claims()) {
    RowBuilder b("seed-sets", c.generator.to_string());
    std::vector<Factorization> printed;
    for (const auto& s : c.seeds) printed.push_back(Factorization::parse(s));
    std::sort(printed.begin(), printed.end(), [](const auto& x, const auto& y) { return x.n() < y.n(); });
    std::vector<std::string> claimed, computed;
    for (const auto& f : printed) claimed.push_back(f.to_string());
    for (const auto& s : build_seeds(c.generator, kAuditBound)) computed.push_back(s.factors.to_string());
    b.exact("seeds", "{" + join(claimed) + "}", "{" + join(computed) + "}");
    out.push_back(b.done());
  }
  return out;
}

inline std::vector<AuditRow> audit_virtual_alphas() {
  std::vector<AuditRow> out;
  for (const auto& c : virtual_alpha_claims()) {
    const Factorization u = Factorization::parse(c.seed);
    RowBuilder b("virtual-alpha", u.to_string());
    const VirtualAlpha v = evaluate_seed(AlphaSeed::from(u, kAuditBound));
    b.exact("chi", "0", std::to_string(v.chi));

    std::vector<ChiReason> implied;
    if (!c.even) implied.push_back(ChiReason::forced_smaller_prime);
    if (c.exceeds) implied.push_back(ChiReason::exceeds_bound);
    if (c.even) implied.push_back(ChiReason::forced_even_factor);
    std::vector<std::string> implied_s, computed_s;
    for (auto r : implied) implied_s.push_back(to_string(r));
    for (auto r : v.reasons) computed_s.push_back(to_string(r));
    const bool reasons_ok = std::all_of(implied.begin(), implied.end(), [&](ChiReason r) {
      return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end();
    });
    b.contained("reasons", join(implied_s), join(computed_s), reasons_ok);

    // The printed column may list only part of what the closure forces.
    bool forced_ok = true;
    if (!c.forced.empty()) {
      const Factorization printed = Factorization::parse(c.forced);
      for (const auto& pp : printed.parts()) {
        forced_ok = forced_ok && std::any_of(v.forced.parts().begin(), v.forced.parts().end(), [&](const PrimePower& q) {
                      return q.prime == pp.prime && q.exponent >= pp.exponent;
                    });
      }
    }
    b.contained("forced", c.forced.empty() ? "" : canonical(c.forced), v.forced.is_one() ? "" : v.forced.to_string(),
                forced_ok);
    b.extra("virtual_value", to_string(v.value));
    out.push_back(b.done());
  }
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& audit_table_ids() {
  static const std::vector<std::string> ids{"divisor-sums",       "strong-examples", "weak-examples", "even-strong-list",
                                            "prime-power-sigmas", "generator-caps",  "seed-sets",     "virtual-alpha"};
  return ids;
}

/// Recomputes one reference table.
inline std::vector<AuditRow> audit_table(const std::string& id) {
  if (id == "divisor-sums") return detail::audit_divisor_sums();
  if (id == "strong-examples") return detail::audit_ratio_table(id, detail::strong_example_claims(), Verdict::Strong);
  if (id == "weak-examples") return detail::audit_ratio_table(id, detail::weak_example_claims(), Verdict::Weak);
  if (id == "even-strong-list") {
    auto rows = detail::audit_ratio_table(id, detail::even_strong_claims(), Verdict::Strong);
    rows.push_back(detail::audit_even_strong_completeness());
    return rows;
  }
  if (id == "prime-power-sigmas") return detail::audit_prime_power_sigmas();
  if (id == "generator-caps") return detail::audit_generator_caps();
  if (id == "seed-sets") return detail::audit_seed_sets();
  if (id == "virtual-alpha") return detail::audit_virtual_alphas();
  throw std::invalid_argument("unknown table id '" + id + "'");
}

inline std::vector<AuditRow> audit_tables() {
  std::vector<AuditRow> out;
  for (const auto& id : audit_table_ids()) {
    auto rows = audit_table(id);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace alphanum
