#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "darboux/demos.hpp"
#include "darboux/oracle.hpp"
#include "darboux/runner.hpp"
#include "darboux/scenario.hpp"
#include "darboux/table.hpp"
#include "oracles.hpp"

using namespace darboux;

namespace {

constexpr const char* kMinimal = R"json({
  "name": "minimal",
  "seed": 7,
  "surfaces": {"plane": {"x": "u", "y": "v", "z": "0", "u": [-2, 2], "v": [-2, 2]}},
  "curves": {"circle": {"surface": "plane", "u": "cos(t)", "v": "sin(t)", "t": [0, "2*pi"], "samples": 16}},
  "maps": {"id": {"source": "plane", "target": "plane"}},
  "checks": [
    {"id": "classify-curve", "curve": "circle", "expect": "rectifying"},
    {"id": "T32", "map": "id", "curve": "circle"}
  ]
})json";

// Apply a JSON merge patch to the minimal scenario and return the error text.
std::string error_for(const nlohmann::json& patch) {
  nlohmann::json doc = nlohmann::json::parse(kMinimal);
  doc.merge_patch(patch);
  try {
    const Scenario s = parse_scenario(doc.dump());
    const ScenarioModel model(s);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "darboux-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("a minimal scenario parses") {
    const Scenario s = parse_scenario(kMinimal);
    CHECK(s.name == "minimal");
    CHECK(s.seed == 7);
    CHECK(s.tolerance == kCheckTolerance);
    REQUIRE(s.curves.size() == 1);
    CHECK(s.curves[0].samples == 16);
    CHECK(s.curves[0].t.max == doctest::Approx(2 * std::acos(-1.0)));
    CHECK(s.checks.size() == 2);
    CHECK_FALSE(s.canonical.empty());
  }

  TEST_CASE("schema violations name their path") {
    CHECK(error_for({{"colour", "red"}}).find("colour") != std::string::npos);
    CHECK(error_for({{"surfaces", {{"plane", {{"w", "1"}}}}}}).find("surfaces.plane.w") != std::string::npos);
    CHECK(error_for({{"curves", {{"circle", {{"samples", 4}}}}}}).find("curves.circle.samples") != std::string::npos);
    CHECK(error_for({{"curves", {{"circle", {{"t", {1, 1}}}}}}}).find("curves.circle.t") != std::string::npos);
    CHECK(error_for({{"curves", {{"circle", {{"surface", "sphere"}}}}}}).find("curves.circle.surface") != std::string::npos);
    CHECK(error_for({{"curves", {{"circle", {{"mode", "fast"}}}}}}).find("curves.circle.mode") != std::string::npos);
    CHECK(error_for({{"maps", {{"id", {{"target", "nowhere"}}}}}}).find("maps.id.target") != std::string::npos);
    CHECK(error_for({{"seed", -1}}).find("seed") != std::string::npos);
    CHECK(error_for({{"tolerance", 0}}).find("tolerance") != std::string::npos);

    const std::string expr_error = error_for({{"surfaces", {{"plane", {{"x", "u +* v"}}}}}});
    CHECK(expr_error.find("surfaces.plane.x") != std::string::npos);
    CHECK(expr_error.find("position") != std::string::npos);

    nlohmann::json bad_check = nlohmann::json::parse(kMinimal);
    bad_check["checks"][1]["id"] = "T99";
    CHECK_THROWS_WITH_AS(parse_scenario(bad_check.dump()), doctest::Contains("checks[1].id"), ConfigError);
    bad_check["checks"][1] = {{"id", "T32"}, {"curve", "circle"}};
    CHECK_THROWS_WITH_AS(parse_scenario(bad_check.dump()), doctest::Contains("checks[1]"), ConfigError);
    bad_check["checks"][1] = {{"id", "frames"}, {"curve", "circle"}, {"map", "id"}};
    CHECK_THROWS_WITH_AS(parse_scenario(bad_check.dump()), doctest::Contains("checks[1].map"), ConfigError);
    bad_check["checks"][1] = {{"id", "classify-map"}, {"map", "id"}, {"expect", "affine"}};
    CHECK_THROWS_WITH_AS(parse_scenario(bad_check.dump()), doctest::Contains("checks[1].expect"), ConfigError);

    CHECK_THROWS_AS(parse_scenario("{ not json"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("[]"), ConfigError);
    CHECK_THROWS_AS(load_scenario("demo:no-such-demo"), ConfigError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ConfigError);
  }

  TEST_CASE("a curve must live on its map's source surface") {
    nlohmann::json doc = nlohmann::json::parse(kMinimal);
    doc["surfaces"]["lifted"] = {{"x", "u"}, {"y", "v"}, {"z", "1"}, {"u", {-2, 2}}, {"v", {-2, 2}}};
    doc["maps"]["lift"] = {{"source", "lifted"}, {"target", "plane"}};
    doc["checks"].push_back({{"id", "T32"}, {"map", "lift"}, {"curve", "circle"}});
    CHECK_THROWS_WITH_AS(parse_scenario(doc.dump()), doctest::Contains("checks[2]"), ConfigError);
  }

  TEST_CASE("all built-in demos parse and cover every check id") {
    REQUIRE(demos().size() == 8);
    std::set<std::string> used;
    for (const Demo& d : demos()) {
      INFO(d.name);
      const Scenario s = load_scenario("demo:" + std::string(d.name));
      CHECK(s.name == d.name);
      for (const auto& c : s.checks) used.insert(c.id);
      CHECK(find_demo(d.name) == &d);
    }
    for (std::string_view id : check_ids()) CHECK_MESSAGE(used.count(std::string(id)) == 1, id);
    CHECK(find_demo("nope") == nullptr);
  }

  TEST_CASE("every demo passes") {
    for (const Demo& d : demos()) {
      const RunResult r = run_scenario(load_scenario("demo:" + std::string(d.name)));
      INFO(d.name);
      CHECK(r.pass);
      CHECK(r.exit_code() == 0);
      // Every scenario check appears exactly once, in order.
      const auto report = nlohmann::json::parse(r.report);
      const Scenario s = load_scenario("demo:" + std::string(d.name));
      REQUIRE(report["checks"].size() == s.checks.size());
      for (std::size_t i = 0; i < s.checks.size(); ++i) {
        CHECK(report["checks"][i]["index"] == i);
        CHECK(report["checks"][i]["id"] == s.checks[i].id);
      }
      CHECK(report["schema"] == std::string(kReportSchema));
      CHECK(report["tool_version"] == std::string(kToolVersion));
    }
  }

  TEST_CASE("spot values of the helicoid-catenoid and sphere demos") {
    const RunResult hc = run_scenario(load_scenario("demo:helicoid-catenoid"));
    for (const CheckOutcome& o : hc.checks) {
      if (o.map_classification) CHECK(o.map_classification->kind == MapKind::Isometry);
      if (o.id == "T32" || o.id == "T33" || o.id == "T34") CHECK(o.report->max <= 1e-7);
    }
    const RunResult sp = run_scenario(load_scenario("demo:sphere-not-rectifying"));
    CHECK(sp.exit_code() == 0);
    bool seen = false;
    for (const CheckOutcome& o : sp.checks)
      if (o.curve_verdict && o.subject == "equator") {
        seen = true;
        CHECK_FALSE(o.curve_verdict->rectifying);
        CHECK(std::abs(std::abs(o.curve_verdict->witness_nu) - 1.0) <= 1e-9);
      }
    CHECK(seen);
  }

  TEST_CASE("an unmet expectation fails the run with exit code 1") {
    nlohmann::json doc = nlohmann::json::parse(kMinimal);
    doc["checks"][0]["expect"] = "not-rectifying";
    const RunResult r = run_scenario(parse_scenario(doc.dump()));
    CHECK_FALSE(r.pass);
    CHECK(r.exit_code() == 1);
    CHECK_FALSE(r.checks[0].pass);
    CHECK(r.checks[1].pass);
  }

  TEST_CASE("checker preconditions surface as configuration errors") {
    nlohmann::json doc = nlohmann::json::parse(kMinimal);
    doc["surfaces"]["bowl"] = {{"x", "u"}, {"y", "v"}, {"z", "u^2"}, {"u", {-2, 2}}, {"v", {-2, 2}}};
    doc["maps"]["bend"] = {{"source", "plane"}, {"target", "bowl"}};
    doc["checks"] = {{{"id", "T32"}, {"map", "bend"}, {"curve", "circle"}}};
    CHECK_THROWS_AS(run_scenario(parse_scenario(doc.dump())), ConfigError);
  }

  TEST_CASE("reports are deterministic modulo the wall clock") {
    const Scenario s = load_scenario("demo:helicoid-catenoid");
    const RunResult a = run_scenario(s), b = run_scenario(s);
    CHECK(a.report.find(kWallClockKey) != std::string::npos);
    CHECK(strip_wall_clock(a.report).find(kWallClockKey) == std::string::npos);
    CHECK(strip_wall_clock(a.report) == strip_wall_clock(b.report));
    CHECK(a.digest == b.digest);

    RunOverrides other;
    other.seed = 99;
    const RunResult c = run_scenario(s, other);
    CHECK(c.digest != a.digest);
    CHECK(strip_wall_clock(c.report) != strip_wall_clock(a.report));

    RunOverrides loose;
    loose.tolerance = 1e-3;
    const RunResult d = run_scenario(s, loose);
    CHECK(d.tolerance == 1e-3);
    CHECK(d.digest != a.digest);
    for (const CheckOutcome& o : d.checks)
      if (o.report && o.id.starts_with("T")) CHECK(o.report->tolerance == 1e-3);
  }

  TEST_CASE("digests and seeds") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
    std::set<std::uint64_t> seeds;
    for (std::size_t i = 0; i < 100; ++i) seeds.insert(check_seed(1, i));
    CHECK(seeds.size() == 100);
    CHECK(check_seed(1, 3) == check_seed(1, 3));
    CHECK(check_seed(1, 3) != check_seed(2, 3));
  }

  TEST_CASE("report and tables are written where configured") {
    const auto report = scratch("report.json");
    const auto dir = scratch("tables");
    std::filesystem::remove_all(dir);
    RunOverrides o;
    o.report_path = report.string();
    o.csv_dir = dir.string();
    const RunResult r = run_scenario(load_scenario("demo:plane-rolled-cylinder"), o);
    CHECK(slurp(report) == r.report);
    CHECK(std::filesystem::exists(dir / "circle.csv"));
    CHECK(std::filesystem::exists(dir / "helix.csv"));
  }

  TEST_CASE("sample tables") {
    const Scenario s = load_scenario("demo:plane-identity");
    const ScenarioModel model(s);
    const auto samples = sample_curve(model.surface("plane"), model.curve("circle"), 16);
    const auto d = decompose_position(samples);
    std::ostringstream a, b;
    write_sample_table(a, samples, d);
    write_sample_table(b, samples, d);
    CHECK(a.str() == b.str());

    std::istringstream in(a.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == kSampleTableHeader);
    CHECK(line == "t,s,u,v,x,y,z,kappa,kappa_g,kappa_n,tau_g,alpha,lambda,mu,nu");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      const auto cells = split(line);
      REQUIRE(cells.size() == 15);
      CHECK(std::abs(std::stod(cells[14])) <= 1e-10);
      // Full round-trip precision.
      CHECK(std::stod(cells[0]) == samples[rows].t);
      CHECK(std::stod(cells[7]) == samples[rows].kappa);
      ++rows;
    }
    CHECK(rows == 16);

    const Scenario cyl = load_scenario("demo:plane-rolled-cylinder");
    const ScenarioModel cm(cyl);
    const auto helix = sample_curve(cm.surface("cylinder"), cm.curve("helix"), 16);
    std::ostringstream h;
    write_sample_table(h, helix, decompose_position(helix));
    std::istringstream hin(h.str());
    std::getline(hin, line);
    while (std::getline(hin, line)) CHECK(std::abs(std::stod(split(line)[8])) <= 1e-9);
  }

  TEST_CASE("number formatting round-trips") {
    auto g = oracle::rng(6);
    for (int i = 0; i < 1000; ++i) {
      const double x = std::ldexp(oracle::uniform(g, -1, 1), static_cast<int>(oracle::uniform(g, -60, 60)));
      CHECK(std::stod(format_number(x)) == x);
    }
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(INFINITY) == "inf");
    CHECK(format_number(-INFINITY) == "-inf");
  }

  TEST_CASE("finite-difference oracle") {
    for (const Demo& d : demos()) {
      const Scenario s = load_scenario("demo:" + std::string(d.name));
      const ScenarioModel m(s);
      const OracleReport r = fd_oracle(s, m, 1e-5);
      INFO(d.name);
      CHECK(r.worst <= kOracleTolerance);
      CHECK(r.quantities.size() == 12);
      CHECK_FALSE(step_too_small(s, m, 1e-5));
    }

    // Quadratic patch along a straight chart line: gamma(t) is quadratic, so
    // central differences are exact up to rounding.
    nlohmann::json doc = nlohmann::json::parse(kMinimal);
    doc["surfaces"]["plane"]["z"] = "u^2 + v^2";
    doc["curves"]["circle"]["u"] = "0.5 + t";
    doc["curves"]["circle"]["v"] = "0.3 - 0.5*t";
    doc["curves"]["circle"]["t"] = {-1, 1};
    const Scenario quad = parse_scenario(doc.dump());
    const ScenarioModel qm(quad);
    CHECK(fd_oracle(quad, qm, 1e-3).worst <= 1e-8);
    CHECK(fd_oracle(quad, qm, 1e-4).worst <= 1e-8);
    // With no truncation error left, smaller steps only add rounding noise.
    CHECK(step_too_small(quad, qm, 1e-5));

    // Curved path: deviation falls with the step, then plateaus.
    const Scenario circle = parse_scenario(kMinimal);
    const ScenarioModel cm(circle);
    const OracleSweep sweep = fd_oracle_sweep(circle, cm);
    REQUIRE(sweep.reports.size() == 5);
    CHECK(sweep.reports[1].worst < 0.1 * sweep.reports[0].worst);
    REQUIRE(sweep.plateau.has_value());
    CHECK(*sweep.plateau >= 2);
    CHECK(sweep.reports[4].worst > sweep.reports[*sweep.plateau].worst);

    CHECK_THROWS_AS(fd_oracle(quad, qm, 1e-8), ConfigError);
    CHECK_THROWS_AS(fd_oracle(quad, qm, 1e-2), ConfigError);
  }
}
