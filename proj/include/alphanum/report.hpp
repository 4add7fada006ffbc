#pragma once

#include <openssl/evp.h>

#include <cstdint>
#include <iomanip>
#include <map>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "audit.hpp"
#include "records.hpp"

namespace alphanum {

using json = nlohmann::json;

enum class Format { table, json, csv };

// ---------------------------------------------------------------------------
// Records

inline json to_json(const AlphaRecord& r) {
  return json{
      {"n", to_string(r.n)},
      {"factorization", r.factorization.to_string()},
      {"sigma", to_string(r.sigma)},
      {"alpha1", to_string(r.ratio.num())},
      {"alpha2", to_string(r.ratio.den())},
      {"omega", r.classification.omega},
      {"tau", to_string(r.classification.tau)},
      {"verdict", to_string(r.classification.verdict)},
      {"variant", to_string(r.variant)},
      {"boundary_flag", r.classification.boundary_flag},
      {"order", json{{"under", to_literal(r.order.under)}, {"upper", to_literal(r.order.upper)}}},
  };
}

inline AlphaRecord record_from_json(const json& j) {
  AlphaRecord r;
  r.n = parse_big(j.at("n").get<std::string>());
  r.factorization = Factorization::parse(j.at("factorization").get<std::string>());
  if (r.factorization.n() != r.n) throw std::invalid_argument("record factorization does not match n");
  r.sigma = parse_big(j.at("sigma").get<std::string>());
  r.ratio = ReducedRatio(parse_big(j.at("alpha1").get<std::string>()), parse_big(j.at("alpha2").get<std::string>()));
  r.variant = parse_variant(j.at("variant").get<std::string>());
  r.order = Order::general(parse_quaternion(j.at("order").at("under").get<std::string>()),
                           parse_quaternion(j.at("order").at("upper").get<std::string>()));
  auto& c = r.classification;
  c.verdict = parse_verdict(j.at("verdict").get<std::string>());
  c.ratio = r.ratio;
  c.omega = j.at("omega").get<unsigned>();
  c.tau = parse_big(j.at("tau").get<std::string>());
  c.variant = r.variant;
  c.boundary_flag = j.at("boundary_flag").get<bool>();
  return r;
}

inline json to_json(const std::vector<AlphaRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr;
}

inline std::vector<AlphaRecord> records_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<AlphaRecord> out;
  for (const auto& item : j) out.push_back(record_from_json(item));
  return out;
}

// ---------------------------------------------------------------------------
// Audit rows

inline json to_json(const AuditRow& r) {
  return json{{"table", r.table_id},     {"row", r.row},
              {"claimed", r.claimed},    {"computed", r.computed},
              {"status", to_string(r.status)}, {"discrepancy", r.discrepancy}};
}

inline AuditRow audit_row_from_json(const json& j) {
  AuditRow r;
  r.table_id = j.at("table").get<std::string>();
  r.row = j.at("row").get<std::string>();
  r.claimed = j.at("claimed").get<std::map<std::string, std::string>>();
  r.computed = j.at("computed").get<std::map<std::string, std::string>>();
  r.status = parse_audit_status(j.at("status").get<std::string>());
  r.discrepancy = j.at("discrepancy").get<std::string>();
  return r;
}

inline json to_json(const std::vector<AuditRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

inline std::vector<AuditRow> audit_rows_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<AuditRow> out;
  for (const auto& item : j) out.push_back(audit_row_from_json(item));
  return out;
}

// ---------------------------------------------------------------------------
// CSV and plain tables

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
  return line + "\n";
}

inline const std::vector<std::string>& record_csv_header() {
  static const std::vector<std::string> h{"n", "factorization", "sigma", "alpha1", "alpha2",
                                          "omega", "tau", "verdict", "variant"};
  return h;
}

inline std::vector<std::string> record_fields(const AlphaRecord& r) {
  return {to_string(r.n),
          r.factorization.to_string(),
          to_string(r.sigma),
          to_string(r.ratio.num()),
          to_string(r.ratio.den()),
          std::to_string(r.classification.omega),
          to_string(r.classification.tau),
          to_string(r.classification.verdict),
          to_string(r.variant)};
}

inline std::string flatten(const std::map<std::string, std::string>& m) {
  std::string out;
  for (const auto& [k, v] : m) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

inline const std::vector<std::string>& audit_csv_header() {
  static const std::vector<std::string> h{"table", "row", "status", "claimed", "computed", "discrepancy"};
  return h;
}

inline std::vector<std::string> audit_fields(const AuditRow& r) {
  return {r.table_id, r.row, to_string(r.status), flatten(r.claimed), flatten(r.computed), r.discrepancy};
}

/// Left-aligned columns separated by two spaces.
inline std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

inline std::string emit_report(const std::vector<AlphaRecord>& records, Format format) {
  switch (format) {
    case Format::json: return to_json(records).dump() + "\n";
    case Format::csv: {
      std::string out = csv_line(record_csv_header());
      for (const auto& r : records) out += csv_line(record_fields(r));
      return out;
    }
    case Format::table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : records) rows.push_back(record_fields(r));
      return text_table(record_csv_header(), rows);
    }
  }
  return {};
}

inline std::string emit_report(const std::vector<AuditRow>& rows, Format format) {
  switch (format) {
    case Format::json: return to_json(rows).dump() + "\n";
    case Format::csv: {
      std::string out = csv_line(audit_csv_header());
      for (const auto& r : rows) out += csv_line(audit_fields(r));
      return out;
    }
    case Format::table: {
      std::vector<std::vector<std::string>> body;
      for (const auto& r : rows) body.push_back({r.table_id, r.row, to_string(r.status), r.discrepancy});
      return text_table({"table", "row", "status", "discrepancy"}, body);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Run manifest

inline constexpr const char* kToolVersion = "0.1.0";

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string tool_version = kToolVersion;
  std::uint64_t duration_ms = 0;
  std::string result_digest;

  json to_json() const {
    return json{{"command", command},
                {"parameters", parameters},
                {"tool_version", tool_version},
                {"duration_ms", duration_ms},
                {"result_digest", result_digest}};
  }
};

/// The digest covers the canonical (sorted-key, compact) JSON of the result.
inline RunManifest make_manifest(std::string command, std::map<std::string, std::string> parameters,
                                 const json& result, std::uint64_t duration_ms) {
  RunManifest m;
  m.command = std::move(command);
  m.parameters = std::move(parameters);
  m.duration_ms = duration_ms;
  m.result_digest = sha256_hex(result.dump());
  return m;
}

}  // namespace alphanum
