#include "darboux/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "darboux/table.hpp"

namespace darboux {
namespace {

using Json = nlohmann::ordered_json;

Json track_json(const Track& t) {
  return Json{{"name", t.name},
              {"max", t.max},
              {"mean", t.mean},
              {"tolerance", t.tolerance},
              {"evaluated", t.residuals.size()},
              {"informational", t.informational},
              {"pass", t.pass}};
}

Json report_json(const TheoremReport& r) {
  Json j{{"max", r.max},         {"mean", r.mean},      {"tolerance", r.tolerance},
         {"samples", r.samples}, {"skipped", r.skipped}, {"tracks", Json::array()},
         {"notes", r.notes}};
  for (const Track& t : r.tracks) j["tracks"].push_back(track_json(t));
  return j;
}

Json classification_json(const MapClassification& c) {
  Json j{{"kind", to_string(c.kind)},
         {"tolerance", c.tolerance},
         {"grid_points", c.samples.size()},
         {"c_squared", c.c_squared},
         {"rho2_spread", c.rho2_spread},
         {"max_conformal_residual", c.max_conformal_residual},
         {"max_isometry_residual", c.max_isometry_residual},
         {"max_rho2_minus_one", c.max_rho2_minus_one}};
  if (c.max_declared_rho2_deviation) j["max_declared_rho2_deviation"] = *c.max_declared_rho2_deviation;
  return j;
}

Json outcome_json(const CheckOutcome& o) {
  Json j{{"index", o.index}, {"id", o.id}, {"subject", o.subject}, {"pass", o.pass}};
  if (o.expected) j["expect"] = *o.expected;
  if (o.curve_verdict) {
    const RectifyingVerdict& v = *o.curve_verdict;
    j["classification"] = v.rectifying ? "rectifying" : "not-rectifying";
    j["rectifying_tolerance"] = v.tolerance;
    j["witness_sample"] = v.witness;
    j["witness_nu"] = v.witness_nu;
    if (o.decomposition) {
      j["max_abs_nu"] = o.decomposition->max_abs_nu;
      j["mean_abs_nu"] = o.decomposition->mean_abs_nu;
    }
  }
  if (o.map_classification) j["map"] = classification_json(*o.map_classification);
  if (o.partials) {
    Json p{{"max", o.partials->max}, {"points", o.partials->points},
           {"declared_rho", o.partials->declared_rho}, {"residuals", Json::object()}};
    for (std::size_t k = 0; k < o.partials->max_residual.size(); ++k)
      p["residuals"][std::string(PartialTransferReport::kNames[k])] = o.partials->max_residual[k];
    j["partials"] = p;
  }
  if (o.report) j["report"] = report_json(*o.report);
  return j;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void write_tables(const Scenario& scenario, const ScenarioModel& model, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create table directory " + dir + ": " + ec.message());
  for (const CurveSpec& c : scenario.curves) {
    const auto samples = sample_curve(model.surface(c.surface), model.curve(c.name), c.samples);
    const auto path = std::filesystem::path(dir) / (c.name + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    write_sample_table(out, samples, decompose_position(samples));
  }
}

class Runner {
 public:
  Runner(const Scenario& s, const RunOverrides& o) : scenario_(s), overrides_(o), model_(s) {}

  CheckOutcome run(const CheckSpec& spec, std::size_t index) {
    CheckOutcome out;
    out.index = index;
    out.id = spec.id;
    out.expected = spec.expect;
    const CheckOptions opts{
        overrides_.tolerance.value_or(spec.tolerance.value_or(scenario_.tolerance)),
        check_seed(overrides_.seed.value_or(scenario_.seed), index), spec.draws.value_or(64)};

    if (spec.id == "frames") {
      out.subject = spec.curve;
      out.report = check_frames(samples(spec.curve));
      out.pass = out.report->pass;
    } else if (spec.id == "metric-identities") {
      out.subject = spec.surface;
      out.report = check_metric_identities(model_.surface(spec.surface), spec.grid);
      out.pass = out.report->pass;
    } else if (spec.id == "classify-curve") {
      out.subject = spec.curve;
      out.decomposition = decompose_position(samples(spec.curve));
      out.curve_verdict = classify_darboux_rectifying(*out.decomposition);
      const std::string got = out.curve_verdict->rectifying ? "rectifying" : "not-rectifying";
      out.pass = !spec.expect || *spec.expect == got;
    } else if (spec.id == "classify-map") {
      out.subject = spec.map;
      out.map_classification = classify_map(model_.map(spec.map), spec.grid);
      out.pass = !spec.expect || *spec.expect == to_string(out.map_classification->kind);
    } else if (spec.id == "conformal-partials") {
      out.subject = spec.map;
      out.partials = conformal_partial_check(model_.map(spec.map), spec.grid);
      out.pass = out.partials->max <= opts.tolerance;
    } else {
      out.subject = spec.map + ":" + spec.curve;
      const MappedCurve& mc = mapped(spec);
      using Checker = TheoremReport (*)(const MappedCurve&, const CheckOptions&);
      static const std::map<std::string, Checker, std::less<>> checkers{
          {"T31", check_T31}, {"T32", check_T32}, {"T33", check_T33}, {"T34", check_T34},
          {"T41", check_T41}, {"T42", check_T42}, {"T43", check_T43}, {"T44", check_T44}};
      out.report = checkers.at(spec.id)(mc, opts);
      out.pass = out.report->pass;
    }
    return out;
  }

  const ScenarioModel& model() const { return model_; }

 private:
  const std::vector<FrameSample>& samples(const std::string& curve) {
    auto it = samples_.find(curve);
    if (it == samples_.end()) {
      const CurveSpec& c = model_.curve_spec(curve);
      it = samples_.emplace(curve, sample_curve(model_.surface(c.surface), model_.curve(curve), c.samples)).first;
    }
    return it->second;
  }

  const MappedCurve& mapped(const CheckSpec& spec) {
    const std::string key = spec.map + "\n" + spec.curve + "\n" + std::to_string(spec.grid.nu) + "x" +
                            std::to_string(spec.grid.nv);
    auto it = mapped_.find(key);
    if (it == mapped_.end()) {
      const CurveSpec& c = model_.curve_spec(spec.curve);
      it = mapped_.emplace(key, map_curve(model_.map(spec.map), model_.curve(spec.curve), c.samples, spec.grid))
               .first;
    }
    return it->second;
  }

  const Scenario& scenario_;
  const RunOverrides& overrides_;
  ScenarioModel model_;
  std::map<std::string, std::vector<FrameSample>> samples_;
  std::map<std::string, MappedCurve> mapped_;
};

}  // namespace

std::uint64_t check_seed(std::uint64_t scenario_seed, std::size_t check_index) {
  return splitmix64(scenario_seed ^ splitmix64(static_cast<std::uint64_t>(check_index)));
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xF];
  return out;
}

std::string strip_wall_clock(std::string_view report) {
  std::string out;
  std::size_t pos = 0;
  while (pos < report.size()) {
    std::size_t end = report.find('\n', pos);
    if (end == std::string_view::npos) end = report.size();
    const std::string_view line = report.substr(pos, end - pos);
    if (line.find(kWallClockKey) == std::string_view::npos) {
      out.append(line);
      if (end < report.size()) out.push_back('\n');
    }
    pos = end + 1;
  }
  return out;
}

RunResult run_scenario(const Scenario& scenario, const RunOverrides& overrides) {
  const auto start = std::chrono::steady_clock::now();
  RunResult r;
  r.scenario = scenario.name;
  r.seed = overrides.seed.value_or(scenario.seed);
  r.tolerance = overrides.tolerance.value_or(scenario.tolerance);
  std::ostringstream digest_input;
  digest_input << scenario.canonical << '\n' << r.seed << '\n' << format_number(r.tolerance) << '\n'
               << (overrides.tolerance ? "tol-override" : "");
  r.digest = fnv1a_hex(digest_input.str());

  Runner runner(scenario, overrides);
  r.pass = true;
  for (std::size_t i = 0; i < scenario.checks.size(); ++i) {
    r.checks.push_back(runner.run(scenario.checks[i], i));
    r.pass = r.pass && r.checks.back().pass;
  }

  const auto csv_dir = overrides.csv_dir ? overrides.csv_dir : scenario.csv_dir;
  if (csv_dir) write_tables(scenario, runner.model(), *csv_dir);

  r.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json doc{{"schema", kReportSchema},
           {"tool_version", kToolVersion},
           {"scenario", r.scenario},
           {"digest", "fnv1a64:" + r.digest},
           {"seed", r.seed},
           {"tolerance", r.tolerance},
           {"pass", r.pass},
           {"checks", Json::array()}};
  for (const CheckOutcome& o : r.checks) doc["checks"].push_back(outcome_json(o));
  doc[std::string(kWallClockKey)] = r.wall_clock;
  r.report = doc.dump(2) + "\n";

  const auto report_path = overrides.report_path ? overrides.report_path : scenario.report_path;
  if (report_path) {
    std::ofstream out(*report_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write report " + *report_path);
    out << r.report;
  }
  return r;
}

}  // namespace darboux
