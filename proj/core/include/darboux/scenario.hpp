#pragma once

// Scenario documents: named surfaces, curves and maps plus a list of checks.
//
// Scenarios are JSON. Expressions are DSL strings; interval endpoints may be
// numbers or constant DSL strings such as "2*pi". See README.md for the schema.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/geom.hpp"
#include "darboux/surfmap.hpp"
#include "darboux/theorems.hpp"

namespace darboux {

struct SurfaceSpec {
  std::string name;
  std::string x, y, z;
  Interval u, v;
};

struct CurveSpec {
  std::string name;
  std::string surface;
  std::string u, v;
  Interval t;
  std::size_t samples = 32;
  ParamMode mode = ParamMode::Reparametrize;
};

struct MapSpec {
  std::string name;
  std::string source;
  std::string target;
  std::optional<std::string> rho;
};

struct CheckSpec {
  std::string id;
  std::string curve;
  std::string map;
  std::string surface;
  std::optional<std::string> expect;
  std::optional<double> tolerance;
  std::optional<std::size_t> draws;
  SampleGrid grid;
};

struct Scenario {
  std::string name;
  std::uint64_t seed = 0;
  double tolerance = kCheckTolerance;
  std::vector<SurfaceSpec> surfaces;
  std::vector<CurveSpec> curves;
  std::vector<MapSpec> maps;
  std::vector<CheckSpec> checks;
  std::optional<std::string> report_path;
  std::optional<std::string> csv_dir;
  std::string canonical;  // normalised document text, input to the digest
};

inline constexpr std::size_t kMinCurveSamples = 8;

/// Every recognised check id, in documentation order.
const std::vector<std::string_view>& check_ids();

/// Parse and validate a scenario document. Schema violations raise
/// ConfigError naming the offending path, e.g. "curves.c1.samples".
Scenario parse_scenario(std::string_view text, std::string_view name = "scenario");

/// Load from a file path, or from the built-in library for "demo:<name>".
Scenario load_scenario(std::string_view ref);

/// Surfaces, curves and maps of a scenario, parsed and ready to evaluate.
class ScenarioModel {
 public:
  explicit ScenarioModel(const Scenario& scenario);

  const SurfacePatch& surface(std::string_view name) const;
  const CurveOnSurface& curve(std::string_view name) const;
  const CurveSpec& curve_spec(std::string_view name) const;
  const SurfaceCorrespondence& map(std::string_view name) const;

 private:
  std::map<std::string, SurfacePatch, std::less<>> surfaces_;
  std::map<std::string, CurveOnSurface, std::less<>> curves_;
  std::map<std::string, CurveSpec, std::less<>> curve_specs_;
  std::map<std::string, SurfaceCorrespondence, std::less<>> maps_;
};

}  // namespace darboux
