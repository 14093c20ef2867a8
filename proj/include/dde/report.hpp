#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dde/bandwidth.hpp"
#include "dde/dataset.hpp"
#include "dde/dde_test.hpp"
#include "dde/entropy.hpp"
#include "dde/families.hpp"
#include "dde/montecarlo.hpp"

namespace dde {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct DatasetRef {
  std::string name;
  std::string source;
  std::size_t n = 0;

  bool operator==(const DatasetRef&) const = default;
};

/// Everything needed to replay a test run from its own output. The thread
/// count is left out: it cannot change the result.
struct TestReport {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::optional<std::string> timestamp;
  DatasetRef dataset;
  TestConfig config;
  DdeResult result;

  bool operator==(const TestReport&) const = default;
};

struct EntropyReport {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  DatasetRef dataset;
  Family family = Family::Normal;  // fitted family (ML) or null family driving the bandwidth (KDE)
  std::optional<FittedModel> fitted;
  EntropyEstimate estimate;

  bool operator==(const EntropyReport&) const = default;
};

/// Manifest written next to a simulation CSV.
struct SimManifest {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  Family null_family = Family::Normal;
  std::vector<FittedModel> dgps;
  std::vector<std::size_t> n_grid;
  std::size_t reps = 0;
  std::size_t n_boot = 0;
  double alpha = 0.05;
  std::uint64_t master_seed = 0;
  SimReport report;

  bool operator==(const SimManifest&) const = default;
};

nlohmann::ordered_json to_json(const TestReport& r);
nlohmann::ordered_json to_json(const EntropyReport& r);
nlohmann::ordered_json to_json(const SimManifest& m);
nlohmann::ordered_json to_json(const FittedModel& m);

/// Inverses of to_json; throw a Data error on malformed or wrong-version input.
TestReport test_report_from_json(const nlohmann::ordered_json& j);
EntropyReport entropy_report_from_json(const nlohmann::ordered_json& j);
SimManifest sim_manifest_from_json(const nlohmann::ordered_json& j);

/// Pretty-printed JSON text with a trailing newline.
std::string dump(const nlohmann::ordered_json& j);

/// One header line plus one row per cell: null,dgp,n,reps,rejections,rate,mc_se,failures.
std::string sim_csv(const SimReport& report);

/// Full-precision decimal text of a double (shortest round-trip form).
std::string format_double(double x);

}  // namespace dde
