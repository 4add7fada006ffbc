#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "alphanum/alphanum.hpp"
#include "alphanum/cli.hpp"

using namespace alphanum;
using nlohmann::json;

namespace {

CommandResult run(std::vector<std::string> args) { return run_command(args); }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

json read_json(const std::filesystem::path& p) {
  std::ifstream f(p);
  return json::parse(f);
}

}  // namespace

TEST(Cli, ClassifyStrong) {
  const auto r = run({"classify", "6", "--order", "1,1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "Strong (2,1)")) << r.out;
}

TEST(Cli, ClassifyJson) {
  const auto r = run({"classify", "28", "--json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const AlphaRecord rec = record_from_json(json::parse(r.out));
  EXPECT_EQ(rec, make_record(factorize(BigInt(28)), Order::integer(1, 1), Variant::exact));
}

TEST(Cli, Sigma) {
  const auto r = run({"sigma", "12"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "28")) << r.out;
}

TEST(Cli, SearchOddCrossCheck) {
  const auto r = run({"search-odd", "--bound", "100000", "--cross-check"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "0 found; methods agree")) << r.out;
}

TEST(Cli, AuditTablesExitCodeAndRows) {
  const auto r = run({"audit-tables", "--json"});
  EXPECT_EQ(r.exit_code, 2);
  const auto rows = audit_rows_from_json(r.out);
  EXPECT_EQ(rows, audit_tables());
  bool saw = false;
  for (const auto& row : rows)
    if (row.row == "707840") {
      saw = true;
      EXPECT_EQ(row.claimed.at("alpha1"), "3");
      EXPECT_EQ(row.computed.at("alpha1"), "219");
    }
  EXPECT_TRUE(saw);
  EXPECT_EQ(run({"audit-tables", "--table", "seed-sets"}).exit_code, 0);
}

TEST(Cli, CsvLayout) {
  const auto r = run({"enumerate", "--bound", "30", "--classes", "strong", "--csv"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "n,factorization,sigma,alpha1,alpha2,omega,tau,verdict,variant\n"
            "6,2*3,12,2,1,2,4,Strong,exact\n"
            "28,2^2*7,56,2,1,2,6,Strong,exact\n");
  const auto empty = run({"enumerate", "--bound", "3", "--csv"});
  EXPECT_EQ(empty.exit_code, 0);
  EXPECT_EQ(empty.out, csv_line(record_csv_header()));
}

TEST(Cli, EnumerateJsonRoundTrip) {
  const auto r = run({"enumerate", "--bound", "5000", "--classes", "strong,weak,veryweak", "--json"});
  ASSERT_EQ(r.exit_code, 0);
  const VerdictSet all{Verdict::Strong, Verdict::Weak, Verdict::VeryWeak};
  EXPECT_EQ(records_from_json(r.out), enumerate_alpha(5000, Order::integer(1, 1), all, Parity::all));
}

TEST(Cli, ManifestDigestIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "alphanum_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json", b = dir / "b.json";
  ASSERT_EQ(run({"count", "--bound", "10000", "--manifest", a.string()}).exit_code, 0);
  ASSERT_EQ(run({"count", "--bound", "10000", "--workers", "2", "--manifest", b.string()}).exit_code, 0);
  const json ma = read_json(a), mb = read_json(b);
  EXPECT_EQ(ma["command"], "count");
  EXPECT_EQ(ma["parameters"]["--bound"], "10000");
  EXPECT_EQ(ma["result_digest"].get<std::string>().size(), 64u);
  EXPECT_EQ(ma["result_digest"], mb["result_digest"]);
  EXPECT_TRUE(ma.contains("tool_version"));
  EXPECT_TRUE(ma.contains("duration_ms"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify", "6", "--order", "1;1"}).exit_code, 1);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 1);
  EXPECT_EQ(run({"verify", "no-such-id"}).exit_code, 1);
  EXPECT_EQ(run({"classify", "0"}).exit_code, 1);
  EXPECT_EQ(run({"enumerate", "--bound", "10", "--json", "--csv"}).exit_code, 1);
  EXPECT_EQ(run({"enumerate", "--bound", "0"}).exit_code, 1);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, SieveCapFromEnvironment) {
  ::setenv(kSieveCapEnv, "1000", 1);
  const auto r = run({"enumerate", "--bound", "5000"});
  ::unsetenv(kSieveCapEnv);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"enumerate", "--bound", "5000"}).exit_code, 0);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "prime-power", "--bound", "10000", "--json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(contains(j.dump(), "prime-power"));
  EXPECT_EQ(run({"verify", "totient-quotient", "--bound", "10000"}).exit_code, 0);
}

TEST(Report, Sha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Report, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}
