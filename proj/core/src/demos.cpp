#include "darboux/demos.hpp"

#include <array>

namespace darboux {
namespace {

constexpr std::string_view kPlaneIdentity = R"json({
  "name": "plane-identity",
  "seed": 1,
  "surfaces": {
    "plane": {"x": "u", "y": "v", "z": "0", "u": [-3, 3], "v": [-3, 3]}
  },
  "curves": {
    "circle": {"surface": "plane", "u": "cos(t)", "v": "sin(t)", "t": [0, "2*pi"], "samples": 32}
  },
  "maps": {
    "id": {"source": "plane", "target": "plane", "rho": "1"}
  },
  "checks": [
    {"id": "frames", "curve": "circle"},
    {"id": "metric-identities", "surface": "plane"},
    {"id": "classify-curve", "curve": "circle", "expect": "rectifying"},
    {"id": "classify-map", "map": "id", "expect": "isometry"},
    {"id": "conformal-partials", "map": "id"},
    {"id": "T31", "map": "id", "curve": "circle"},
    {"id": "T32", "map": "id", "curve": "circle"},
    {"id": "T33", "map": "id", "curve": "circle"},
    {"id": "T34", "map": "id", "curve": "circle"},
    {"id": "T41", "map": "id", "curve": "circle"},
    {"id": "T42", "map": "id", "curve": "circle"},
    {"id": "T43", "map": "id", "curve": "circle"},
    {"id": "T44", "map": "id", "curve": "circle"}
  ]
})json";

constexpr std::string_view kConeIdentity = R"json({
  "name": "cone-identity",
  "seed": 2,
  "surfaces": {
    "cone": {"x": "v*cos(u)", "y": "v*sin(u)", "z": "v", "u": [-1, 7], "v": [0.5, 2]}
  },
  "curves": {
    "wave": {"surface": "cone", "u": "t", "v": "1 + 0.25*sin(t)", "t": [0, "2*pi"], "samples": 32}
  },
  "maps": {
    "id": {"source": "cone", "target": "cone"}
  },
  "checks": [
    {"id": "frames", "curve": "wave"},
    {"id": "metric-identities", "surface": "cone"},
    {"id": "classify-curve", "curve": "wave", "expect": "rectifying"},
    {"id": "classify-map", "map": "id", "expect": "isometry"},
    {"id": "conformal-partials", "map": "id"},
    {"id": "T31", "map": "id", "curve": "wave"},
    {"id": "T32", "map": "id", "curve": "wave"},
    {"id": "T33", "map": "id", "curve": "wave"},
    {"id": "T34", "map": "id", "curve": "wave"},
    {"id": "T41", "map": "id", "curve": "wave"},
    {"id": "T42", "map": "id", "curve": "wave"},
    {"id": "T43", "map": "id", "curve": "wave"}
  ]
})json";

constexpr std::string_view kPlaneRolledCylinder = R"json({
  "name": "plane-rolled-cylinder",
  "seed": 3,
  "surfaces": {
    "plane": {"x": "u", "y": "v", "z": "0", "u": [-1.5, 7], "v": [-4, 4]},
    "cylinder": {"x": "cos(u)", "y": "sin(u)", "z": "v", "u": [-1.5, 7], "v": [-4, 4]}
  },
  "curves": {
    "circle": {"surface": "plane", "u": "cos(t)", "v": "sin(t)", "t": [0, "2*pi"], "samples": 32},
    "helix": {"surface": "cylinder", "u": "t", "v": "0.5*t", "t": [0, "2*pi"], "samples": 32}
  },
  "maps": {
    "roll": {"source": "plane", "target": "cylinder"}
  },
  "checks": [
    {"id": "frames", "curve": "circle"},
    {"id": "frames", "curve": "helix"},
    {"id": "metric-identities", "surface": "plane"},
    {"id": "metric-identities", "surface": "cylinder"},
    {"id": "classify-curve", "curve": "circle", "expect": "rectifying"},
    {"id": "classify-curve", "curve": "helix", "expect": "not-rectifying"},
    {"id": "classify-map", "map": "roll", "expect": "isometry"},
    {"id": "conformal-partials", "map": "roll"},
    {"id": "T31", "map": "roll", "curve": "circle"},
    {"id": "T32", "map": "roll", "curve": "circle"},
    {"id": "T33", "map": "roll", "curve": "circle"},
    {"id": "T34", "map": "roll", "curve": "circle"}
  ]
})json";

constexpr std::string_view kHelicoidCatenoid = R"json({
  "name": "helicoid-catenoid",
  "seed": 4,
  "surfaces": {
    "catenoid": {"x": "cosh(v)*cos(u)", "y": "cosh(v)*sin(u)", "z": "v", "u": [-1, 7], "v": [-2, 2]},
    "helicoid": {"x": "sinh(v)*cos(u)", "y": "sinh(v)*sin(u)", "z": "u", "u": [-1, 7], "v": [-2, 2]}
  },
  "curves": {
    "parallel": {"surface": "catenoid", "u": "t", "v": "1.19967864025773", "t": [0, "2*pi"], "samples": 32},
    "low": {"surface": "catenoid", "u": "t", "v": "0.3", "t": [0, "2*pi"], "samples": 32}
  },
  "maps": {
    "bend": {"source": "catenoid", "target": "helicoid"}
  },
  "checks": [
    {"id": "frames", "curve": "parallel"},
    {"id": "frames", "curve": "low"},
    {"id": "metric-identities", "surface": "catenoid"},
    {"id": "metric-identities", "surface": "helicoid"},
    {"id": "classify-curve", "curve": "parallel", "expect": "rectifying"},
    {"id": "classify-curve", "curve": "low", "expect": "not-rectifying"},
    {"id": "classify-map", "map": "bend", "expect": "isometry"},
    {"id": "conformal-partials", "map": "bend"},
    {"id": "T31", "map": "bend", "curve": "parallel"},
    {"id": "T32", "map": "bend", "curve": "low", "draws": 64},
    {"id": "T33", "map": "bend", "curve": "parallel"},
    {"id": "T34", "map": "bend", "curve": "parallel"},
    {"id": "T42", "map": "bend", "curve": "low"},
    {"id": "T43", "map": "bend", "curve": "parallel"}
  ]
})json";

constexpr std::string_view kHomothetyCone = R"json({
  "name": "homothety-cone",
  "seed": 5,
  "surfaces": {
    "cone": {"x": "v*cos(u)", "y": "v*sin(u)", "z": "v", "u": [-1, 7], "v": [0.5, 2]},
    "cone2": {"x": "2*v*cos(u)", "y": "2*v*sin(u)", "z": "2*v", "u": [-1, 7], "v": [0.5, 2]}
  },
  "curves": {
    "wave": {"surface": "cone", "u": "t", "v": "1 + 0.25*sin(t)", "t": [0, "2*pi"], "samples": 32}
  },
  "maps": {
    "scale": {"source": "cone", "target": "cone2", "rho": "2"}
  },
  "checks": [
    {"id": "frames", "curve": "wave"},
    {"id": "metric-identities", "surface": "cone2"},
    {"id": "classify-curve", "curve": "wave", "expect": "rectifying"},
    {"id": "classify-map", "map": "scale", "expect": "homothety"},
    {"id": "conformal-partials", "map": "scale"},
    {"id": "T41", "map": "scale", "curve": "wave"},
    {"id": "T42", "map": "scale", "curve": "wave"},
    {"id": "T43", "map": "scale", "curve": "wave"}
  ]
})json";

constexpr std::string_view kPlaneStereographic = R"json({
  "name": "plane-stereographic",
  "seed": 6,
  "surfaces": {
    "plane": {"x": "u", "y": "v", "z": "0", "u": [-1.5, 1.5], "v": [-1.5, 1.5]},
    "sphere": {"x": "2*u/(1 + u^2 + v^2)", "y": "2*v/(1 + u^2 + v^2)",
               "z": "(u^2 + v^2 - 1)/(1 + u^2 + v^2)", "u": [-1.5, 1.5], "v": [-1.5, 1.5]}
  },
  "curves": {
    "offset": {"surface": "plane", "u": "0.2 + 0.5*cos(t)", "v": "-0.1 + 0.5*sin(t)", "t": [0, "2*pi"], "samples": 32}
  },
  "maps": {
    "stereo": {"source": "plane", "target": "sphere", "rho": "2/(1 + u^2 + v^2)"}
  },
  "checks": [
    {"id": "frames", "curve": "offset"},
    {"id": "metric-identities", "surface": "sphere"},
    {"id": "classify-curve", "curve": "offset", "expect": "rectifying"},
    {"id": "classify-map", "map": "stereo", "expect": "conformal"},
    {"id": "conformal-partials", "map": "stereo"},
    {"id": "T41", "map": "stereo", "curve": "offset"},
    {"id": "T42", "map": "stereo", "curve": "offset"},
    {"id": "T43", "map": "stereo", "curve": "offset"}
  ]
})json";

constexpr std::string_view kSphereNotRectifying = R"json({
  "name": "sphere-not-rectifying",
  "seed": 7,
  "surfaces": {
    "sphere": {"x": "sin(v)*cos(u)", "y": "sin(v)*sin(u)", "z": "cos(v)", "u": [-1, 7], "v": [0.2, 2.9]}
  },
  "curves": {
    "equator": {"surface": "sphere", "u": "t", "v": "pi/2", "t": [0, "2*pi"], "samples": 32},
    "latitude": {"surface": "sphere", "u": "t", "v": "1", "t": [0, "2*pi"], "samples": 32}
  },
  "checks": [
    {"id": "frames", "curve": "equator"},
    {"id": "frames", "curve": "latitude"},
    {"id": "metric-identities", "surface": "sphere"},
    {"id": "classify-curve", "curve": "equator", "expect": "not-rectifying"},
    {"id": "classify-curve", "curve": "latitude", "expect": "not-rectifying"}
  ]
})json";

constexpr std::string_view kParaboloidMonge = R"json({
  "name": "paraboloid-monge",
  "seed": 8,
  "surfaces": {
    "paraboloid": {"x": "u", "y": "v", "z": "(u^2 + v^2)/2", "u": [-2, 2], "v": [-2, 2]},
    "paraboloid2": {"x": "2*u", "y": "2*v", "z": "u^2 + v^2", "u": [-2, 2], "v": [-2, 2]}
  },
  "curves": {
    "ellipse": {"surface": "paraboloid", "u": "0.5 + 0.8*cos(t)", "v": "0.3*sin(t)", "t": [0, "2*pi"], "samples": 32}
  },
  "maps": {
    "scale": {"source": "paraboloid", "target": "paraboloid2", "rho": "2"}
  },
  "checks": [
    {"id": "frames", "curve": "ellipse"},
    {"id": "metric-identities", "surface": "paraboloid"},
    {"id": "metric-identities", "surface": "paraboloid2"},
    {"id": "classify-curve", "curve": "ellipse", "expect": "not-rectifying"},
    {"id": "classify-map", "map": "scale", "expect": "homothety"},
    {"id": "conformal-partials", "map": "scale"},
    {"id": "T42", "map": "scale", "curve": "ellipse"},
    {"id": "T43", "map": "scale", "curve": "ellipse"},
    {"id": "T44", "map": "scale", "curve": "ellipse"}
  ]
})json";

constexpr std::array<Demo, 8> kDemos{{
    {"plane-identity", "unit circle in the plane z = 0 under the identity map", kPlaneIdentity},
    {"cone-identity", "wavy curve on the cone z = r under the identity map", kConeIdentity},
    {"plane-rolled-cylinder", "plane rolled onto the unit cylinder; cylinder helix", kPlaneRolledCylinder},
    {"helicoid-catenoid", "catenoid bent isometrically onto the helicoid", kHelicoidCatenoid},
    {"homothety-cone", "cone scaled by 2 about its apex", kHomothetyCone},
    {"plane-stereographic", "plane mapped conformally onto the unit sphere", kPlaneStereographic},
    {"sphere-not-rectifying", "equator and a latitude of the unit sphere", kSphereNotRectifying},
    {"paraboloid-monge", "paraboloid Monge patch and its homothety", kParaboloidMonge},
}};

}  // namespace

std::span<const Demo> demos() { return kDemos; }

const Demo* find_demo(std::string_view name) {
  for (const Demo& d : kDemos)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace darboux
