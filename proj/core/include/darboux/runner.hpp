#pragma once

// Executes a scenario's checks and assembles the run report.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/rectify.hpp"
#include "darboux/scenario.hpp"
#include "darboux/surfmap.hpp"
#include "darboux/theorems.hpp"

namespace darboux {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "darboux-report/1";
inline constexpr std::string_view kWallClockKey = "wall_clock_seconds";

struct RunOverrides {
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> report_path;
  std::optional<std::string> csv_dir;
};

struct CheckOutcome {
  std::size_t index = 0;
  std::string id;
  std::string subject;  // curve, map or surface the check ran on
  bool pass = false;
  std::optional<TheoremReport> report;
  std::optional<RectifyingVerdict> curve_verdict;
  std::optional<PositionDecomposition> decomposition;
  std::optional<MapClassification> map_classification;
  std::optional<PartialTransferReport> partials;
  std::optional<std::string> expected;
};

struct RunResult {
  std::string scenario;
  std::string digest;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CheckOutcome> checks;
  bool pass = false;
  double wall_clock = 0.0;
  std::string report;  // JSON document, also written to the report path if any

  int exit_code() const { return pass ? 0 : 1; }
};

/// Run every check in order. Configuration problems (bad references,
/// checker preconditions, parse errors) propagate as darboux::Error.
/// Writes the report and per-curve tables when paths are configured.
RunResult run_scenario(const Scenario& scenario, const RunOverrides& overrides = {});

/// Per-check random seed derived from the scenario seed.
std::uint64_t check_seed(std::uint64_t scenario_seed, std::size_t check_index);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// The report with the wall-clock line removed, for determinism checks.
std::string strip_wall_clock(std::string_view report);

}  // namespace darboux
