#include "darboux/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "darboux/demos.hpp"

namespace darboux {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

void allow_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail(path + "." + key, "unknown key");
  }
}

const Json& require(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required key");
  return *it;
}

const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double get_number(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      const expr::Expr e = expr::Expr::parse(j.get<std::string>(), {});
      return e.value({});
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a number or a constant expression string");
}

std::size_t get_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Interval get_interval(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a two-element array [min, max]");
  const Interval r{get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]")};
  if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.max > r.min))
    fail(path, "interval must be finite with min < max");
  return r;
}

SurfaceSpec parse_surface(const std::string& name, const Json& j, const std::string& path) {
  require_object(j, path);
  allow_keys(j, path, {"x", "y", "z", "u", "v"});
  SurfaceSpec s;
  s.name = name;
  s.x = get_string(require(j, path, "x"), path + ".x");
  s.y = get_string(require(j, path, "y"), path + ".y");
  s.z = get_string(require(j, path, "z"), path + ".z");
  s.u = get_interval(require(j, path, "u"), path + ".u");
  s.v = get_interval(require(j, path, "v"), path + ".v");
  return s;
}

CurveSpec parse_curve(const std::string& name, const Json& j, const std::string& path) {
  require_object(j, path);
  allow_keys(j, path, {"surface", "u", "v", "t", "samples", "mode"});
  CurveSpec c;
  c.name = name;
  c.surface = get_string(require(j, path, "surface"), path + ".surface");
  c.u = get_string(require(j, path, "u"), path + ".u");
  c.v = get_string(require(j, path, "v"), path + ".v");
  c.t = get_interval(require(j, path, "t"), path + ".t");
  if (j.contains("samples")) c.samples = get_count(j["samples"], path + ".samples");
  if (c.samples < kMinCurveSamples)
    fail(path + ".samples", "at least " + std::to_string(kMinCurveSamples) + " samples required");
  if (j.contains("mode")) {
    const std::string mode = get_string(j["mode"], path + ".mode");
    if (mode == "reparametrize")
      c.mode = ParamMode::Reparametrize;
    else if (mode == "unit-speed")
      c.mode = ParamMode::AssertUnitSpeed;
    else
      fail(path + ".mode", "expected \"reparametrize\" or \"unit-speed\", got \"" + mode + "\"");
  }
  return c;
}

MapSpec parse_map(const std::string& name, const Json& j, const std::string& path) {
  require_object(j, path);
  allow_keys(j, path, {"source", "target", "rho"});
  MapSpec m;
  m.name = name;
  m.source = get_string(require(j, path, "source"), path + ".source");
  m.target = get_string(require(j, path, "target"), path + ".target");
  if (j.contains("rho")) m.rho = get_string(j["rho"], path + ".rho");
  return m;
}

bool is_theorem(std::string_view id) { return id.size() == 3 && id[0] == 'T'; }

CheckSpec parse_check(const Json& j, const std::string& path) {
  require_object(j, path);
  allow_keys(j, path, {"id", "curve", "map", "surface", "expect", "tol", "draws", "grid"});
  CheckSpec c;
  c.id = get_string(require(j, path, "id"), path + ".id");
  const auto& ids = check_ids();
  if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) fail(path + ".id", "unknown check id \"" + c.id + "\"");

  const bool needs_curve = c.id == "frames" || c.id == "classify-curve" || is_theorem(c.id);
  const bool needs_map = c.id == "classify-map" || c.id == "conformal-partials" || is_theorem(c.id);
  const bool needs_surface = c.id == "metric-identities";
  if (needs_curve) c.curve = get_string(require(j, path, "curve"), path + ".curve");
  if (needs_map) c.map = get_string(require(j, path, "map"), path + ".map");
  if (needs_surface) c.surface = get_string(require(j, path, "surface"), path + ".surface");
  if (!needs_curve && j.contains("curve")) fail(path + ".curve", "not used by check " + c.id);
  if (!needs_map && j.contains("map")) fail(path + ".map", "not used by check " + c.id);
  if (!needs_surface && j.contains("surface")) fail(path + ".surface", "not used by check " + c.id);

  if (j.contains("expect")) {
    c.expect = get_string(j["expect"], path + ".expect");
    if (c.id == "classify-curve") {
      if (*c.expect != "rectifying" && *c.expect != "not-rectifying")
        fail(path + ".expect", "expected \"rectifying\" or \"not-rectifying\"");
    } else if (c.id == "classify-map") {
      if (!map_kind_from_string(*c.expect))
        fail(path + ".expect", "expected one of isometry, homothety, conformal, general");
    } else {
      fail(path + ".expect", "only classification checks take an expected verdict");
    }
  }
  if (j.contains("tol")) {
    c.tolerance = get_number(j["tol"], path + ".tol");
    if (!(*c.tolerance > 0.0)) fail(path + ".tol", "tolerance must be positive");
  }
  if (j.contains("draws")) c.draws = get_count(j["draws"], path + ".draws");
  if (j.contains("grid")) {
    const Json& g = j["grid"];
    if (!g.is_array() || g.size() != 2) fail(path + ".grid", "expected [nu, nv]");
    c.grid.nu = get_count(g[0], path + ".grid[0]");
    c.grid.nv = get_count(g[1], path + ".grid[1]");
    if (c.grid.nu == 0 || c.grid.nv == 0) fail(path + ".grid", "grid must be nonempty");
  }
  return c;
}

template <class Spec>
void require_ref(const std::vector<Spec>& specs, const std::string& name, const std::string& path,
                 const char* kind) {
  for (const Spec& s : specs)
    if (s.name == name) return;
  fail(path, std::string("unknown ") + kind + " \"" + name + "\"");
}

template <class Spec>
const Spec& find_spec(const std::vector<Spec>& specs, const std::string& name) {
  return *std::find_if(specs.begin(), specs.end(), [&](const Spec& s) { return s.name == name; });
}

void validate_refs(const Scenario& s) {
  for (const CurveSpec& c : s.curves) require_ref(s.surfaces, c.surface, "curves." + c.name + ".surface", "surface");
  for (const MapSpec& m : s.maps) {
    require_ref(s.surfaces, m.source, "maps." + m.name + ".source", "surface");
    require_ref(s.surfaces, m.target, "maps." + m.name + ".target", "surface");
  }
  for (std::size_t i = 0; i < s.checks.size(); ++i) {
    const CheckSpec& c = s.checks[i];
    const std::string path = "checks[" + std::to_string(i) + "]";
    if (!c.curve.empty()) require_ref(s.curves, c.curve, path + ".curve", "curve");
    if (!c.map.empty()) require_ref(s.maps, c.map, path + ".map", "map");
    if (!c.surface.empty()) require_ref(s.surfaces, c.surface, path + ".surface", "surface");
    if (!c.curve.empty() && !c.map.empty()) {
      const std::string& on = find_spec(s.curves, c.curve).surface;
      const std::string& src = find_spec(s.maps, c.map).source;
      if (on != src)
        fail(path, "curve \"" + c.curve + "\" lies on \"" + on + "\" but map \"" + c.map +
                       "\" starts from \"" + src + "\"");
    }
  }
}

template <class Spec, class F>
std::vector<Spec> parse_named(const Json& doc, const char* key, F parse_one) {
  std::vector<Spec> out;
  if (!doc.contains(key)) return out;
  const Json& section = require_object(doc[key], key);
  for (const auto& [name, value] : section.items()) {
    if (name.empty()) fail(key, "empty name");
    out.push_back(parse_one(name, value, std::string(key) + "." + name));
  }
  return out;
}

}  // namespace

const std::vector<std::string_view>& check_ids() {
  static const std::vector<std::string_view> ids{
      "frames", "metric-identities", "classify-curve", "classify-map", "conformal-partials",
      "T31",    "T32",               "T33",            "T34",          "T41",
      "T42",    "T43",               "T44"};
  return ids;
}

Scenario parse_scenario(std::string_view text, std::string_view name) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string(name) + ": malformed JSON: " + e.what());
  }
  require_object(doc, "(document)");
  allow_keys(doc, "(document)", {"name", "seed", "tolerance", "surfaces", "curves", "maps", "checks", "output"});

  Scenario s;
  s.name = doc.contains("name") ? get_string(doc["name"], "name") : std::string(name);
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("seed", "expected a nonnegative integer");
    s.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("tolerance")) {
    s.tolerance = get_number(doc["tolerance"], "tolerance");
    if (!(s.tolerance > 0.0)) fail("tolerance", "tolerance must be positive");
  }
  s.surfaces = parse_named<SurfaceSpec>(doc, "surfaces", parse_surface);
  s.curves = parse_named<CurveSpec>(doc, "curves", parse_curve);
  s.maps = parse_named<MapSpec>(doc, "maps", parse_map);
  if (doc.contains("checks")) {
    const Json& checks = doc["checks"];
    if (!checks.is_array()) fail("checks", "expected an array");
    for (std::size_t i = 0; i < checks.size(); ++i)
      s.checks.push_back(parse_check(checks[i], "checks[" + std::to_string(i) + "]"));
  }
  if (doc.contains("output")) {
    const Json& out = require_object(doc["output"], "output");
    allow_keys(out, "output", {"report", "csv_dir"});
    if (out.contains("report")) s.report_path = get_string(out["report"], "output.report");
    if (out.contains("csv_dir")) s.csv_dir = get_string(out["csv_dir"], "output.csv_dir");
  }
  validate_refs(s);
  s.canonical = doc.dump();
  return s;
}

Scenario load_scenario(std::string_view ref) {
  constexpr std::string_view prefix = "demo:";
  if (ref.substr(0, prefix.size()) == prefix) {
    const std::string_view name = ref.substr(prefix.size());
    const Demo* demo = find_demo(name);
    if (demo == nullptr) throw ConfigError("unknown demo \"" + std::string(name) + "\"");
    return parse_scenario(demo->document, demo->name);
  }
  std::ifstream in{std::string(ref)};
  if (!in) throw ConfigError("cannot open scenario file " + std::string(ref));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), ref);
}

ScenarioModel::ScenarioModel(const Scenario& scenario) {
  const auto wrap = [](const std::string& path, auto&& build) {
    try {
      return build();
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(path + ": " + e.what());
    }
  };
  for (const SurfaceSpec& s : scenario.surfaces) {
    const std::string path = "surfaces." + s.name;
    const auto component = [&](const std::string& text, const char* key) {
      return wrap(path + "." + key, [&] { return expr::Expr::parse(text, {"u", "v"}); });
    };
    surfaces_.emplace(s.name, SurfacePatch(component(s.x, "x"), component(s.y, "y"), component(s.z, "z"), s.u, s.v));
  }
  for (const CurveSpec& c : scenario.curves) {
    const std::string path = "curves." + c.name;
    expr::Expr u = wrap(path + ".u", [&] { return expr::Expr::parse(c.u, {"t"}); });
    expr::Expr v = wrap(path + ".v", [&] { return expr::Expr::parse(c.v, {"t"}); });
    curves_.emplace(c.name, CurveOnSurface(std::move(u), std::move(v), c.t, c.mode));
    curve_specs_.emplace(c.name, c);
  }
  for (const MapSpec& m : scenario.maps) {
    const std::string path = "maps." + m.name;
    std::optional<expr::Expr> rho;
    if (m.rho) rho = wrap(path + ".rho", [&] { return expr::Expr::parse(*m.rho, {"u", "v"}); });
    maps_.emplace(m.name, wrap(path, [&] {
                    return SurfaceCorrespondence(surface(m.source), surface(m.target), std::move(rho));
                  }));
  }
}

const SurfacePatch& ScenarioModel::surface(std::string_view name) const {
  const auto it = surfaces_.find(name);
  if (it == surfaces_.end()) throw ConfigError("unknown surface \"" + std::string(name) + "\"");
  return it->second;
}

const CurveOnSurface& ScenarioModel::curve(std::string_view name) const {
  const auto it = curves_.find(name);
  if (it == curves_.end()) throw ConfigError("unknown curve \"" + std::string(name) + "\"");
  return it->second;
}

const CurveSpec& ScenarioModel::curve_spec(std::string_view name) const {
  const auto it = curve_specs_.find(name);
  if (it == curve_specs_.end()) throw ConfigError("unknown curve \"" + std::string(name) + "\"");
  return it->second;
}

const SurfaceCorrespondence& ScenarioModel::map(std::string_view name) const {
  const auto it = maps_.find(name);
  if (it == maps_.end()) throw ConfigError("unknown map \"" + std::string(name) + "\"");
  return it->second;
}

}  // namespace darboux
