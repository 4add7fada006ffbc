#pragma once

#include <algorithm>
#include <chrono>
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "audit.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "seeds.hpp"
#include "theorems.hpp"

namespace alphanum {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr const char* kSieveCapEnv = "ALPHANUM_MAX_SIEVE";

/// Sieve entry cap, overridable through the environment.
inline std::uint64_t sieve_cap_from_env() {
  const char* v = std::getenv(kSieveCapEnv);
  if (!v || !*v) return kDefaultSieveCap;
  try {
    return to_u64(parse_big(v));
  } catch (const std::exception&) {
    throw usage_error(std::string(kSieveCapEnv) + " must be a positive integer");
  }
}

namespace detail {

struct CliOptions {
  std::string n;
  std::string order;
  std::string under;
  std::string upper;
  std::string variant = "exact";
  std::string parity = "all";
  std::string classes = "strong,weak,very-weak";
  std::string target = "all";
  std::string table;
  std::string manifest;
  std::uint64_t bound = 0;
  double precision = 0;
  unsigned workers = 1;
  bool json = false;
  bool csv = false;
  bool cross_check = false;
};

// What a subcommand produced: canonical data plus its renderings.
struct Output {
  json data;
  std::string table;
  std::string csv;
  int exit_code = 0;
};

inline Precision precision_of(const CliOptions& o) {
  if (o.precision == 0) return {};
  return Precision(std::min(1e-12, o.precision / 10), o.precision);
}

inline Order order_of(const CliOptions& o) {
  if (!o.under.empty() || !o.upper.empty()) {
    if (!o.order.empty()) throw usage_error("use either --order or --under/--upper");
    return Order::general(parse_quaternion(o.under.empty() ? "1" : o.under),
                          parse_quaternion(o.upper.empty() ? "1" : o.upper));
  }
  return parse_integer_order(o.order.empty() ? "1,1" : o.order);
}

inline VerdictSet classes_of(const std::string& text) {
  VerdictSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      out.insert({Verdict::Strong, Verdict::Weak, Verdict::VeryWeak, Verdict::NotAlpha});
    } else if (!item.empty()) {
      out.insert(parse_verdict(item));
    }
  }
  if (out.empty()) throw usage_error("--classes needs at least one class");
  return out;
}

inline std::uint64_t require_bound(const CliOptions& o) {
  if (o.bound == 0) throw usage_error("--bound is required");
  return o.bound;
}

inline EnumerateOptions enumerate_options(const CliOptions& o) {
  EnumerateOptions e;
  e.variant = parse_variant(o.variant);
  e.precision = precision_of(o);
  e.sieve_cap = sieve_cap_from_env();
  e.workers = o.workers;
  return e;
}

inline Output records_output(const std::vector<AlphaRecord>& records) {
  return {to_json(records), emit_report(records, Format::table), emit_report(records, Format::csv), 0};
}

inline json quaternion_json(const Quaternion& q) { return json{{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}}; }

inline Output run_sigma(const CliOptions& o) {
  const Factorization f = factorize(parse_big(o.n));
  const Precision prec = precision_of(o);
  const Quaternion x = parse_quaternion(o.under.empty() ? "1" : o.under);
  Output out;
  out.data = json{{"n", to_string(f.n())}, {"factorization", f.to_string()}, {"under", to_literal(x)}};
  std::ostringstream table;
  table << "n = " << f.to_string() << "\n";
  if (x.is_nonneg_integer()) {
    const BigInt s = sigma_k_exact(f, static_cast<unsigned long>(x.a));
    out.data["sigma"] = to_string(s);
    table << "sigma_" << to_literal(x) << " = " << to_string(s) << "\n";
    out.csv = csv_line({"n", "under", "sigma"}) + csv_line({to_string(f.n()), to_literal(x), to_string(s)});
  } else {
    const Quaternion v = sigma_general(f, x, prec);
    const RoundedModulus lo = rounded_modulus(v, RoundMode::floor, prec);
    const RoundedModulus hi = rounded_modulus(v, RoundMode::ceiling, prec);
    out.data["value"] = quaternion_json(v);
    out.data["floor_abs"] = to_string(lo.value);
    out.data["ceil_abs"] = to_string(hi.value);
    out.data["boundary_flag"] = lo.boundary || hi.boundary;
    table << "sigma_" << to_literal(x) << " = " << to_literal(v, 10) << "\n"
          << "floor |sigma| = " << to_string(lo.value) << ", ceil |sigma| = " << to_string(hi.value) << "\n";
    out.csv = csv_line({"n", "under", "value", "floor_abs", "ceil_abs"}) +
              csv_line({to_string(f.n()), to_literal(x), to_literal(v), to_string(lo.value), to_string(hi.value)});
  }
  out.table = table.str();
  return out;
}

inline Output run_classify(const CliOptions& o) {
  const Factorization f = factorize(parse_big(o.n));
  const AlphaRecord r = make_record(f, order_of(o), parse_variant(o.variant), precision_of(o));
  Output out = records_output({r});
  out.data = to_json(r);
  std::ostringstream t;
  t << to_string(r.n) << " = " << r.factorization.to_string() << "  order (" << r.order.to_string() << ")  "
    << to_string(r.variant) << "\n"
    << "verdict " << to_string(r.classification.verdict) << " (" << to_string(r.ratio.num()) << ","
    << to_string(r.ratio.den()) << ")  omega " << r.classification.omega << "  tau " << to_string(r.classification.tau)
    << (r.classification.boundary_flag ? "  [boundary]" : "") << "\n";
  out.table = t.str();
  return out;
}

inline Output run_enumerate(const CliOptions& o) {
  return records_output(enumerate_alpha(require_bound(o), order_of(o), classes_of(o.classes), parse_parity(o.parity),
                                        enumerate_options(o)));
}

inline Output run_count(const CliOptions& o) {
  const ClassCounts c = count_alpha(require_bound(o), order_of(o), parse_parity(o.parity), enumerate_options(o));
  Output out;
  out.data = json{{"strong", c.strong}, {"weak", c.weak}, {"very_weak", c.very_weak}, {"not_alpha", c.not_alpha}};
  const std::vector<std::string> h{"strong", "weak", "very_weak", "not_alpha"};
  const std::vector<std::string> v{std::to_string(c.strong), std::to_string(c.weak), std::to_string(c.very_weak),
                                   std::to_string(c.not_alpha)};
  out.table = text_table(h, {v});
  out.csv = csv_line(h) + csv_line(v);
  return out;
}

inline Output run_search_odd(const CliOptions& o) {
  const std::uint64_t bound = require_bound(o);
  if (bound > sieve_cap_from_env()) throw resource_error("bound exceeds sieve cap");
  const SeedSearchResult seed = seed_search_odd(bound, o.workers);
  Output out = records_output(seed.records);
  const auto& s = seed.stats;
  out.data = json{{"bound", bound},
                  {"records", to_json(seed.records)},
                  {"stats", json{{"generators", s.generators},
                                 {"nodes", s.nodes},
                                 {"pruned_even_factor", s.pruned_even_factor},
                                 {"pruned_smaller_prime", s.pruned_smaller_prime},
                                 {"pruned_abundancy", s.pruned_abundancy}}}};
  std::ostringstream t;
  t << seed.records.size() << " found";
  if (o.cross_check) {
    EnumerateOptions e;
    e.sieve_cap = sieve_cap_from_env();
    e.workers = o.workers;
    const auto sieve = enumerate_alpha(bound, Order::integer(1, 1), {Verdict::Strong}, Parity::odd, e);
    const bool agree = sieve == seed.records;
    out.data["cross_check"] = agree ? "agree" : "disagree";
    out.data["sieve_count"] = sieve.size();
    t << (agree ? "; methods agree" : "; methods DISAGREE (sieve found " + std::to_string(sieve.size()) + ")");
    if (!agree) out.exit_code = 2;
  }
  t << "\n";
  if (!seed.records.empty()) t << emit_report(seed.records, Format::table);
  out.table = t.str() + "generators " + std::to_string(s.generators) + ", nodes " + std::to_string(s.nodes) +
              ", pruned: even " + std::to_string(s.pruned_even_factor) + ", smaller prime " +
              std::to_string(s.pruned_smaller_prime) + ", abundancy " + std::to_string(s.pruned_abundancy) + "\n";
  return out;
}

// Bounds used when --bound is omitted.
inline std::uint64_t default_theorem_bound(const std::string& id) {
  if (id == "multiperfect-strong" || id == "abundancy-bound" || id == "totient-quotient") return 100000;
  if (id == "large-upper-order") return 10000;
  return 1000000;
}

inline Output run_verify(const CliOptions& o) {
  std::vector<std::string> ids;
  if (o.target == "all") {
    ids = theorem_ids();
  } else {
    ids = {o.target};
  }
  const std::uint64_t cap = sieve_cap_from_env();
  Output out;
  out.data = json::array();
  std::vector<std::vector<std::string>> rows;
  std::string csv = csv_line({"id", "bound", "checked", "result", "counterexample", "detail"});
  std::map<std::uint64_t, SieveTable> sieves;
  auto sieve_for = [&](std::uint64_t bound) -> const SieveTable& {
    auto it = sieves.find(bound);
    if (it == sieves.end()) it = sieves.emplace(bound, build_sieve(std::max<std::uint64_t>(bound, 3), cap)).first;
    return it->second;
  };
  for (const auto& id : ids) {
    const std::uint64_t bound = o.bound ? o.bound : default_theorem_bound(id);
    if (id == "totient-quotient") {
      const auto m = totient_quotient_max(sieve_for(bound));
      out.data.push_back(json{{"id", id}, {"bound", bound}, {"max", m.value}, {"argmax", m.argmax}});
      const std::string detail = "max sigma(n)/(n ln ln phi(n)) = " + format_double(m.value, 8) + " at n = " +
                                 std::to_string(m.argmax);
      rows.push_back({id, std::to_string(bound), "-", "report", detail});
      csv += csv_line({id, std::to_string(bound), "", "report", "", detail});
      continue;
    }
    if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
      throw usage_error("unknown theorem id '" + id + "'");
    const TheoremReport r = verify_theorem(id, sieve_for(bound));
    json j{{"id", r.id}, {"bound", r.bound}, {"checked", r.checked}, {"pass", r.pass}, {"detail", r.detail}};
    j["counterexample"] = r.counterexample ? json(std::to_string(*r.counterexample)) : json(nullptr);
    out.data.push_back(j);
    const std::string ce = r.counterexample ? std::to_string(*r.counterexample) : "";
    rows.push_back({r.id, std::to_string(r.bound), std::to_string(r.checked), r.pass ? "pass" : "FAIL", r.detail});
    csv += csv_line({r.id, std::to_string(r.bound), std::to_string(r.checked), r.pass ? "pass" : "fail", ce, r.detail});
    if (!r.pass) out.exit_code = 2;
  }
  out.table = text_table({"id", "bound", "checked", "result", "detail"}, rows);
  out.csv = csv;
  return out;
}

inline Output run_audit(const CliOptions& o) {
  const auto rows = o.table.empty() ? audit_tables() : audit_table(o.table);
  Output out{to_json(rows), emit_report(rows, Format::table), emit_report(rows, Format::csv), 0};
  const auto bad = std::count_if(rows.begin(), rows.end(), [](const AuditRow& r) { return r.status == AuditStatus::mismatch; });
  out.table += std::to_string(rows.size()) + " rows, " + std::to_string(bad) + " mismatch\n";
  if (bad > 0) out.exit_code = 2;
  return out;
}

inline std::map<std::string, std::string> parameters_of(const CLI::App& sub) {
  std::map<std::string, std::string> p;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--manifest") continue;
    std::string v;
    for (const auto& r : opt->results()) v += (v.empty() ? "" : ",") + r;
    p[opt->get_name(false, true)] = v;
  }
  return p;
}

}  // namespace detail

/// Runs one command line (without the program name). Never throws; errors
/// become exit codes: 1 usage, 2 failure or mismatch, 3 resource cap.
inline CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult res;
  detail::CliOptions o;
  CLI::App app{"Alpha number toolkit: divisor sums, classification, bounded searches, table audits", "alphanum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto common = [&](CLI::App* s) {
    auto* j = s->add_flag("--json", o.json, "canonical JSON output");
    auto* c = s->add_flag("--csv", o.csv, "CSV output");
    j->excludes(c);
    s->add_option("--manifest", o.manifest, "write a run manifest (JSON) to this file");
  };
  auto order_opts = [&](CLI::App* s) {
    s->add_option("--order", o.order, "integer order a,b (default 1,1)");
    s->add_option("--under", o.under, "lower order literal: R, a+bi or a+bi+cj+dk");
    s->add_option("--upper", o.upper, "upper order literal");
    s->add_option("--variant", o.variant, "exact | floored | ceiled");
    s->add_option("--precision", o.precision, "boundary tolerance for floored/ceiled rounding")
        ->check(CLI::PositiveNumber);
  };

  auto* sigma = app.add_subcommand("sigma", "divisor sum sigma_x(n)");
  sigma->add_option("n", o.n, "positive integer")->required();
  sigma->add_option("--under", o.under, "exponent literal (default 1)");
  sigma->add_option("--precision", o.precision, "boundary tolerance for rounding")->check(CLI::PositiveNumber);
  common(sigma);

  auto* classify = app.add_subcommand("classify", "classify one integer");
  classify->add_option("n", o.n, "positive integer")->required();
  order_opts(classify);
  common(classify);

  auto* enumerate = app.add_subcommand("enumerate", "list alpha numbers up to a bound");
  enumerate->add_option("--bound", o.bound, "inclusive upper bound")->required();
  enumerate->add_option("--classes", o.classes, "comma list: strong,weak,very-weak,not-alpha or all");
  enumerate->add_option("--parity", o.parity, "odd | even | all");
  enumerate->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
  order_opts(enumerate);
  common(enumerate);

  auto* count = app.add_subcommand("count", "count each class up to a bound");
  count->add_option("--bound", o.bound, "inclusive upper bound")->required();
  count->add_option("--parity", o.parity, "odd | even | all");
  count->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
  order_opts(count);
  common(count);

  auto* search = app.add_subcommand("search-odd", "seed-pruned search for odd strong numbers of order (1,1)");
  search->add_option("--bound", o.bound, "inclusive upper bound")->required();
  search->add_flag("--cross-check", o.cross_check, "compare against a full sieve scan");
  search->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
  common(search);

  auto* verify = app.add_subcommand("verify", "exhaustively check a proved statement up to a bound");
  verify->add_option("id", o.target, "statement id, totient-quotient, or all");
  verify->add_option("--bound", o.bound, "inclusive upper bound (default depends on id)");
  common(verify);

  auto* audit = app.add_subcommand("audit-tables", "recompute the reference tables");
  audit->add_option("--table", o.table, "restrict to one table id");
  common(audit);

  std::ostringstream out, err;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? 0 : 1;
    return res;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    const auto t0 = std::chrono::steady_clock::now();
    detail::Output result;
    if (name == "sigma") result = detail::run_sigma(o);
    else if (name == "classify") result = detail::run_classify(o);
    else if (name == "enumerate") result = detail::run_enumerate(o);
    else if (name == "count") result = detail::run_count(o);
    else if (name == "search-odd") result = detail::run_search_odd(o);
    else if (name == "verify") result = detail::run_verify(o);
    else result = detail::run_audit(o);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

    res.out = o.json ? result.data.dump() + "\n" : o.csv ? result.csv : result.table;
    res.exit_code = result.exit_code;
    if (!o.manifest.empty()) {
      const RunManifest m = make_manifest(name, detail::parameters_of(*sub), result.data,
                                          static_cast<std::uint64_t>(ms.count()));
      std::ofstream f(o.manifest);
      if (!f) throw usage_error("cannot write manifest '" + o.manifest + "'");
      f << m.to_json().dump(2) << "\n";
    }
  } catch (const resource_error& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 3;
  } catch (const std::invalid_argument& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
  } catch (const std::domain_error& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
  } catch (const std::exception& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
  }
  return res;
}

}  // namespace alphanum
