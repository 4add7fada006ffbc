#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "alphanum/alphanum.hpp"

using namespace alphanum;

namespace {

const VerdictSet kAlphaClasses{Verdict::Strong, Verdict::Weak, Verdict::VeryWeak};

std::vector<std::uint64_t> values(const std::vector<AlphaRecord>& rs) {
  std::vector<std::uint64_t> out;
  for (const auto& r : rs) out.push_back(to_u64(r.n));
  return out;
}

const AuditRow& find_row(const std::vector<AuditRow>& rows, const std::string& row) {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const AuditRow& r) { return r.row == row; });
  if (it == rows.end()) throw std::runtime_error("missing row " + row);
  return *it;
}

}  // namespace

TEST(Enumerate, StrongUpToOneThousand) {
  const auto rs = enumerate_alpha(1000, Order::integer(1, 1), {Verdict::Strong}, Parity::all);
  EXPECT_EQ(values(rs), (std::vector<std::uint64_t>{6, 28, 120, 496, 672}));
}

TEST(Enumerate, EvenStrongUpToOneHundredThousand) {
  const auto rs = enumerate_alpha(100000, Order::integer(1, 1), {Verdict::Strong}, Parity::even);
  EXPECT_EQ(values(rs), (std::vector<std::uint64_t>{6, 28, 120, 496, 672, 8128, 30240, 32760}));
}

TEST(Enumerate, OddWeakUpToOneMillion) {
  const auto ns = values(enumerate_alpha(1000000, Order::integer(1, 1), {Verdict::Weak}, Parity::odd));
  EXPECT_TRUE(std::binary_search(ns.begin(), ns.end(), 544635u));
  EXPECT_TRUE(std::binary_search(ns.begin(), ns.end(), 931095u));
  for (auto n : ns) EXPECT_EQ(n % 2, 1u);
}

TEST(Enumerate, RecordsAreSoundAndSorted) {
  const auto rs = enumerate_alpha(20000, Order::integer(1, 1), kAlphaClasses, Parity::all);
  ASSERT_FALSE(rs.empty());
  EXPECT_TRUE(std::is_sorted(rs.begin(), rs.end(), [](const AlphaRecord& a, const AlphaRecord& b) { return a.n < b.n; }));
  for (const auto& r : rs) {
    const Factorization f = factorize(r.n);
    EXPECT_EQ(r.factorization, f);
    EXPECT_EQ(r.sigma, sigma(f));
    EXPECT_EQ(r.classification, classify(f, Order::integer(1, 1), Variant::exact));
    EXPECT_NE(r.classification.verdict, Verdict::NotAlpha);
  }
}

TEST(Enumerate, CompleteOnRandomSample) {
  const std::uint64_t bound = 200000;
  const auto ns = values(enumerate_alpha(bound, Order::integer(1, 1), kAlphaClasses, Parity::all));
  const std::set<std::uint64_t> listed(ns.begin(), ns.end());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, bound);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = pick(rng);
    const bool alpha = classify(factorize(n), Order::integer(1, 1), Variant::exact).verdict != Verdict::NotAlpha;
    EXPECT_EQ(alpha, listed.count(n) == 1) << n;
  }
}

TEST(Enumerate, DeterministicAcrossWorkers) {
  EnumerateOptions one, three;
  three.workers = 3;
  const auto a = enumerate_alpha(50000, Order::integer(1, 1), kAlphaClasses, Parity::all, one);
  const auto b = enumerate_alpha(50000, Order::integer(1, 1), kAlphaClasses, Parity::all, one);
  const auto c = enumerate_alpha(50000, Order::integer(1, 1), kAlphaClasses, Parity::all, three);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Enumerate, OtherOrdersMatchPointwiseClassify) {
  for (const Order& o : {Order::integer(2, 1), Order::integer(0, 1), Order::integer(1, 2)}) {
    const auto rs = enumerate_alpha(3000, o, kAlphaClasses, Parity::all);
    std::set<std::uint64_t> listed;
    for (const auto& r : rs) listed.insert(to_u64(r.n));
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      const bool alpha = classify(factorize(n), o, Variant::exact).verdict != Verdict::NotAlpha;
      ASSERT_EQ(alpha, listed.count(n) == 1) << n;
    }
  }
}

TEST(Enumerate, FlooredVariantMatchesPointwiseClassify) {
  EnumerateOptions opts;
  opts.variant = Variant::floored;
  const Order o = Order::integer(1, 1);
  const auto rs = enumerate_alpha(2000, o, kAlphaClasses, Parity::all, opts);
  std::set<std::uint64_t> listed;
  for (const auto& r : rs) {
    listed.insert(to_u64(r.n));
    EXPECT_EQ(r.variant, Variant::floored);
  }
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const bool alpha = classify(factorize(n), o, Variant::floored).verdict != Verdict::NotAlpha;
    ASSERT_EQ(alpha, listed.count(n) == 1) << n;
  }
}

TEST(Enumerate, Preconditions) {
  EXPECT_THROW(enumerate_alpha(0, Order::integer(1, 1), kAlphaClasses, Parity::all), std::invalid_argument);
  EXPECT_THROW(enumerate_alpha(kDefaultSieveCap + 1, Order::integer(1, 1), kAlphaClasses, Parity::all),
               resource_error);
  EnumerateOptions small;
  small.sieve_cap = 1000;
  EXPECT_THROW(enumerate_alpha(1001, Order::integer(1, 1), kAlphaClasses, Parity::all, small), resource_error);
}

TEST(Count, KnownCounts) {
  EXPECT_EQ(count_alpha(100000, Order::integer(1, 1), Parity::odd).strong, 0u);
  EXPECT_EQ(count_alpha(100, Order::integer(1, 1), Parity::even).strong, 2u);
  const ClassCounts tiny = count_alpha(2, Order::integer(1, 1), Parity::all);
  EXPECT_EQ(tiny.strong + tiny.weak + tiny.very_weak, 0u);
  EXPECT_EQ(tiny.not_alpha, 2u);
}

TEST(Count, AgreesWithEnumerate) {
  for (Parity p : {Parity::odd, Parity::even, Parity::all}) {
    const ClassCounts c = count_alpha(30000, Order::integer(1, 1), p);
    for (Verdict v : {Verdict::Strong, Verdict::Weak, Verdict::VeryWeak})
      EXPECT_EQ(c.of(v), enumerate_alpha(30000, Order::integer(1, 1), {v}, p).size()) << to_string(v);
    EXPECT_EQ(c.strong + c.weak + c.very_weak + c.not_alpha, p == Parity::all ? 30000u : 15000u);
  }
}

TEST(Count, Preconditions) {
  EXPECT_THROW(count_alpha(0, Order::integer(1, 1), Parity::all), std::invalid_argument);
  EXPECT_THROW(count_alpha(kDefaultSieveCap + 1, Order::integer(1, 1), Parity::all), resource_error);
}

TEST(Theorems, HoldAtTheirBounds) {
  const std::vector<std::pair<std::string, std::uint64_t>> cases{
      {"multiperfect-strong", 100000}, {"prime-power", 1000000},         {"odd-squarefree", 1000000},
      {"odd-prime-sigma-powers", 1000000}, {"two-prime-perfect", 100000}, {"abundancy-bound", 100000},
      {"square-two-primes", 100000},   {"large-upper-order", 10000}};
  for (const auto& [id, bound] : cases) {
    const TheoremReport r = verify_theorem(id, bound);
    EXPECT_TRUE(r.pass) << id << ": " << r.detail;
    EXPECT_FALSE(r.counterexample.has_value()) << id;
    EXPECT_GT(r.checked, 0u) << id;
    EXPECT_EQ(r.bound, bound);
  }
}

TEST(Theorems, IdsAndErrors) {
  EXPECT_EQ(theorem_ids().size(), 8u);
  EXPECT_THROW(verify_theorem("no-such-theorem", 100), std::invalid_argument);
  EXPECT_THROW(verify_theorem("prime-power", kDefaultSieveCap + 1), resource_error);
}

TEST(Theorems, TotientQuotientMaximum) {
  const auto m = totient_quotient_max(build_sieve(100000));
  EXPECT_EQ(m.argmax, 12u);
  EXPECT_NEAR(m.value, 7.1436, 1e-3);
}

TEST(Audit, StrongExamples) {
  const auto rows = audit_table("strong-examples");
  EXPECT_EQ(find_row(rows, "523776").status, AuditStatus::verified);
  const AuditRow& bad = find_row(rows, "707840");
  EXPECT_EQ(bad.status, AuditStatus::mismatch);
  EXPECT_EQ(bad.computed.at("alpha1"), "219");
  EXPECT_EQ(bad.computed.at("alpha2"), "79");
  EXPECT_EQ(bad.computed.at("verdict"), "VeryWeak");
  EXPECT_EQ(bad.claimed.at("verdict"), "Strong");
}

TEST(Audit, WeakExamples) {
  const auto rows = audit_table("weak-examples");
  const AuditRow& r = find_row(rows, "544635");
  EXPECT_EQ(r.status, AuditStatus::mismatch);
  EXPECT_EQ(r.computed.at("sigma"), "1244880");
  EXPECT_EQ(r.claimed.at("sigma"), "1244860");
  EXPECT_EQ(r.discrepancy.find("verdict"), std::string::npos);
  for (const char* n : {"24", "11172", "931095", "6517665"})
    EXPECT_EQ(find_row(rows, n).status, AuditStatus::verified) << n;
}

TEST(Audit, EvenStrongList) {
  const auto rows = audit_table("even-strong-list");
  const AuditRow& r = find_row(rows, "1090");
  EXPECT_EQ(r.status, AuditStatus::mismatch);
  EXPECT_EQ(r.computed.at("factorization_product"), "10920");
  EXPECT_EQ(r.computed.at("factorization_product_verdict"), "Weak");
  EXPECT_EQ(find_row(rows, "complete-list").status, AuditStatus::mismatch);
}

TEST(Audit, DivisorSums) {
  const auto rows = audit_table("divisor-sums");
  std::vector<std::string> bad;
  for (const auto& r : rows)
    if (r.status == AuditStatus::mismatch) bad.push_back(r.row);
  EXPECT_EQ(bad, (std::vector<std::string>{"28", "29"}));
}

TEST(Audit, SeedTablesVerify) {
  for (const char* id : {"generator-caps", "seed-sets", "virtual-alpha"})
    for (const auto& r : audit_table(id)) EXPECT_EQ(r.status, AuditStatus::verified) << id << " " << r.row;
}

TEST(Audit, PrimePowerSigmas) {
  std::vector<std::string> bad;
  for (const auto& r : audit_table("prime-power-sigmas"))
    if (r.status == AuditStatus::mismatch) bad.push_back(r.row);
  EXPECT_EQ(bad, (std::vector<std::string>{"3^7", "5^5", "13^3"}));
}

TEST(Audit, EveryMismatchCarriesBothSides) {
  const auto rows = audit_tables();
  EXPECT_TRUE(any_mismatch(rows));
  for (const auto& r : rows) {
    if (r.status != AuditStatus::mismatch) continue;
    EXPECT_FALSE(r.claimed.empty()) << r.table_id << " " << r.row;
    EXPECT_FALSE(r.computed.empty()) << r.table_id << " " << r.row;
    EXPECT_FALSE(r.discrepancy.empty()) << r.table_id << " " << r.row;
  }
  EXPECT_THROW(audit_table("nope"), std::invalid_argument);
}
