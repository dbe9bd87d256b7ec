#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "darboux/demos.hpp"
#include "darboux/oracle.hpp"
#include "darboux/runner.hpp"
#include "darboux/scenario.hpp"
#include "darboux/table.hpp"

namespace {

constexpr int kExitConfig = 2;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void print_outcome(const darboux::CheckOutcome& o) {
  std::cout << (o.pass ? "[pass] " : "[FAIL] ") << '#' << o.index << ' ' << o.id << ' ' << o.subject;
  if (o.report) std::cout << "  max=" << sci(o.report->max) << " tol=" << sci(o.report->tolerance);
  if (o.report && o.report->skipped) std::cout << " skipped=" << o.report->skipped;
  if (o.curve_verdict)
    std::cout << "  " << (o.curve_verdict->rectifying ? "rectifying" : "not-rectifying")
              << " |nu|max=" << sci(std::abs(o.curve_verdict->witness_nu));
  if (o.map_classification)
    std::cout << "  kind=" << darboux::to_string(o.map_classification->kind)
              << " c^2=" << sci(o.map_classification->c_squared);
  if (o.partials) std::cout << "  max=" << sci(o.partials->max);
  if (o.expected) std::cout << " (expected " << *o.expected << ')';
  std::cout << '\n';
}

int cmd_run(const std::string& ref, const darboux::RunOverrides& overrides) {
  const darboux::Scenario scenario = darboux::load_scenario(ref);
  const darboux::RunResult r = darboux::run_scenario(scenario, overrides);
  std::cout << "scenario " << r.scenario << "  digest " << r.digest << "  seed " << r.seed << '\n';
  for (const auto& o : r.checks) print_outcome(o);
  std::cout << (r.pass ? "PASS" : "FAIL") << ": " << r.checks.size() << " check(s)\n";
  return r.exit_code();
}

int cmd_export(const std::string& ref, const std::string& curve, const std::string& path) {
  const darboux::Scenario scenario = darboux::load_scenario(ref);
  const darboux::ScenarioModel model(scenario);
  const darboux::CurveSpec& spec = model.curve_spec(curve);
  const auto samples = darboux::sample_curve(model.surface(spec.surface), model.curve(curve), spec.samples);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw darboux::ConfigError("cannot write " + path);
  darboux::write_sample_table(out, samples, darboux::decompose_position(samples));
  if (!out.flush()) throw darboux::ConfigError("write failed for " + path);
  std::cout << "wrote " << samples.size() << " rows to " << path << '\n';
  return 0;
}

int cmd_oracle(const std::string& ref, double step) {
  const darboux::Scenario scenario = darboux::load_scenario(ref);
  const darboux::ScenarioModel model(scenario);
  const darboux::OracleReport r = darboux::fd_oracle(scenario, model, step);
  std::cout << "fd step " << sci(step) << " over " << r.samples << " sample(s)\n";
  for (const auto& q : r.quantities)
    std::cout << "  " << q.name << std::string(8 - std::min<std::size_t>(q.name.size(), 7), ' ') << sci(q.worst)
              << "  (" << (q.curve.empty() ? "-" : q.curve) << ", t=" << darboux::format_number(q.t) << ")\n";

  const darboux::OracleSweep sweep = darboux::fd_oracle_sweep(scenario, model);
  std::cout << "step sweep:\n";
  for (std::size_t i = 0; i < sweep.reports.size(); ++i)
    std::cout << "  " << sci(sweep.reports[i].step) << "  " << sci(sweep.reports[i].worst)
              << (sweep.plateau && *sweep.plateau == i ? "  <- plateau" : "") << '\n';

  if (darboux::step_too_small(scenario, model, step)) {
    std::cerr << "error: fd step " << sci(step)
              << " is below the rounding-noise floor (deviation grows as the step shrinks)\n";
    return kExitConfig;
  }
  const bool ok = r.worst <= darboux::kOracleTolerance;
  std::cout << (ok ? "PASS" : "FAIL") << ": worst deviation " << sci(r.worst) << " (limit "
            << sci(darboux::kOracleTolerance) << ")\n";
  return ok ? 0 : 1;
}

int cmd_demo_list() {
  for (const auto& d : darboux::demos()) std::cout << d.name << "  " << d.summary << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Darboux-frame toolkit: rectifying curves and their invariance under surface maps"};
  app.require_subcommand(1);

  std::string scenario_ref;
  darboux::RunOverrides overrides;
  std::optional<std::string> out_path, csv_dir;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "run a scenario file or demo:<name>");
  run->add_option("scenario", scenario_ref, "scenario path or demo:<name>")->required();
  run->add_option("--out", out_path, "write the JSON report here");
  run->add_option("--csv-dir", csv_dir, "write one sample table per curve here");
  run->add_option("--tol", tol, "checker tolerance override")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "seed override for random tangent draws");

  std::string export_curve, export_path;
  auto* exp = app.add_subcommand("export", "write the sample table of one curve");
  exp->add_option("scenario", scenario_ref, "scenario path or demo:<name>")->required();
  exp->add_option("curve", export_curve, "curve name")->required();
  exp->add_option("path", export_path, "output CSV path")->required();

  double fd_step = 1e-5;
  auto* oracle = app.add_subcommand("oracle", "compare jet derivatives against finite differences");
  oracle->add_option("scenario", scenario_ref, "scenario path or demo:<name>")->required();
  oracle->add_option("--fd-step", fd_step, "finite-difference step in [1e-7, 1e-3]");

  bool list = false;
  auto* demo = app.add_subcommand("demo", "built-in demo scenarios");
  demo->add_flag("--list", list, "list demo names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) {
      overrides.report_path = out_path;
      overrides.csv_dir = csv_dir;
      overrides.tolerance = tol;
      overrides.seed = seed;
      return cmd_run(scenario_ref, overrides);
    }
    if (*exp) return cmd_export(scenario_ref, export_curve, export_path);
    if (*oracle) return cmd_oracle(scenario_ref, fd_step);
    return cmd_demo_list();
  } catch (const darboux::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
