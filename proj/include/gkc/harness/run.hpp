#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkc/harness/search.hpp"

namespace gkc {

inline constexpr const char* kRunSchema = "gkc-run/1";

/// Pipelines always execute in this order, whatever order the config lists.
inline constexpr const char* kPipelines[] = {"scan", "search-b", "certify", "check-table"};

struct RunConfig {
  std::uint64_t seed = kArtifactSeed;
  std::uint64_t prime_bound = 1000;
  unsigned threads = 0;
  std::vector<std::string> pipelines;

  std::vector<std::string> scan_fields;            // field specs
  std::optional<std::filesystem::path> poly_database;

  SearchConfig search;

  std::vector<std::filesystem::path> descriptors;
  std::optional<std::filesystem::path> tower;
  std::optional<std::size_t> character;  // row of the character table
  bool assume_leopoldt = false;
  bool assume_tower_disjointness = false;
  std::optional<Subset> lift_subgroup;
  std::optional<Subset> subfield;
  std::string subfield_label = "k";

  std::optional<std::filesystem::path> table;
  std::optional<std::filesystem::path> store;

  std::optional<std::filesystem::path> out;
  std::string format = "csv";  // csv | json | both

  bool runs(std::string_view pipeline) const;
};

/// Relative paths resolve against `base_dir`. Throws SchemaViolation.
RunConfig run_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
RunConfig read_run_config(const std::filesystem::path& path);

struct ReportRow {
  std::string pipeline;
  std::string label;
  std::uint64_t prime = 0;
  std::string base_poly;
  std::string note;
  std::optional<unsigned> degree_K;
  std::optional<long long> r_lower_bound;
  std::string verdict;
  std::vector<std::string> certificates;  // "rule-key: summary"
};

struct RunReport {
  std::vector<ReportRow> rows;
  std::vector<std::string> diagnostics;
  std::size_t new_certificates = 0;
  bool invariant_violation = false;
};

inline constexpr const char* kReportColumns[] = {"pipeline", "label", "prime", "base_poly", "note",
                                                 "degree_K", "r_lower_bound", "verdict", "certificates"};

/// Executes the configured pipelines and appends new certificates to the
/// store. Io and schema errors propagate; per-descriptor invariant failures
/// are reported in rows and set `invariant_violation`.
RunReport run(const RunConfig& config);

std::string to_csv(const RunReport& report);
nlohmann::ordered_json to_json(const RunReport& report, const RunConfig& config);
/// Writes report.csv and/or report.json into config.out (no-op when unset).
void write_reports(const RunReport& report, const RunConfig& config);

}  // namespace gkc
