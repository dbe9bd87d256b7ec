#pragma once

// Finite-difference cross-check of the jet pipeline.
//
// At every sample of every curve in a scenario, E, F, G, their partials,
// kappa, kappa_n and A are recomputed from plain evaluations of the embedding
// and the curve: central differences of step h for first derivatives and 10 h
// for second derivatives. Deviation is |fd - jet| / max(1, |jet|).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "darboux/scenario.hpp"

namespace darboux {

inline constexpr double kOracleMinStep = 1e-7;
inline constexpr double kOracleMaxStep = 1e-3;
inline constexpr double kOracleTolerance = 1e-5;

struct OracleQuantity {
  std::string name;
  double worst = 0.0;
  std::string curve;  // where the worst deviation occurred
  double t = 0.0;
};

struct OracleReport {
  double step = 0.0;
  std::vector<OracleQuantity> quantities;
  double worst = 0.0;
  std::size_t samples = 0;
};

/// Throws ConfigError if `step` lies outside [1e-7, 1e-3].
OracleReport fd_oracle(const Scenario& scenario, const ScenarioModel& model, double step);

struct OracleSweep {
  std::vector<OracleReport> reports;  // one per step, largest step first
  std::optional<std::size_t> plateau;  // first step that no longer improves tenfold
};

OracleSweep fd_oracle_sweep(const Scenario& scenario, const ScenarioModel& model,
                            const std::vector<double>& steps = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7});

/// True when the deviation at `step` is more than ten times the deviation at
/// 10 step, i.e. the step sits below the rounding-noise floor.
bool step_too_small(const Scenario& scenario, const ScenarioModel& model, double step);

}  // namespace darboux
