#include <doctest.h>

#include <cmath>

#include "darboux/rectify.hpp"
#include "oracles.hpp"

using namespace darboux;

namespace {

PositionDecomposition decompose(const SurfacePatch& p, const CurveOnSurface& c, std::size_t n = 24) {
  const auto samples = sample_curve(p, c, n);
  return decompose_position(samples);
}

}  // namespace

TEST_SUITE("rectify") {
  TEST_CASE("unit circle on the plane") {
    const SurfacePatch plane = SurfacePatch::parse("u", "v", "0", {-5, 5}, {-5, 5});
    const auto d = decompose(plane, CurveOnSurface::parse("cos(t)", "sin(t)", {0, 6}));
    for (const auto& c : d.samples) {
      CHECK(std::abs(c.lambda) <= 1e-12);
      CHECK(std::abs(c.mu + 1.0) <= 1e-12);
      CHECK(std::abs(c.nu) <= 1e-12);
    }
    const RectifyingVerdict v = classify_darboux_rectifying(d);
    CHECK(v.rectifying);
    CHECK(v.tolerance == doctest::Approx(1e-8 * 2.0));
  }

  TEST_CASE("translated plane has nu = 1") {
    const SurfacePatch lifted = SurfacePatch::parse("u", "v", "1", {-5, 5}, {-5, 5});
    const auto d = decompose(lifted, CurveOnSurface::parse("t", "0.3*t^2", {-1, 2}));
    for (const auto& c : d.samples) CHECK(std::abs(c.nu - 1.0) <= 1e-12);
    CHECK_FALSE(classify_darboux_rectifying(d).rectifying);
  }

  TEST_CASE("any curve on a cone through the origin is rectifying") {
    const SurfacePatch cone = SurfacePatch::parse("v*cos(u)", "v*sin(u)", "v", {-10, 10}, {0.1, 5});
    const auto d = decompose(cone, CurveOnSurface::parse("t", "1 + 0.25*sin(3*t)", {0, 6}));
    CHECK(d.max_abs_nu <= 1e-10);
    CHECK(classify_darboux_rectifying(d).rectifying);
  }

  TEST_CASE("sphere and cylinder witnesses have |nu| equal to the radius") {
    const SurfacePatch sphere =
        SurfacePatch::parse("sin(v)*cos(u)", "sin(v)*sin(u)", "cos(v)", {-10, 10}, {0.01, 3.13});
    const auto ds = decompose(sphere, CurveOnSurface::parse("t", "1.0", {0, 6}));
    const RectifyingVerdict vs = classify_darboux_rectifying(ds);
    CHECK_FALSE(vs.rectifying);
    CHECK(std::abs(std::abs(vs.witness_nu) - 1.0) <= 1e-12);
    CHECK(std::abs(ds.samples[vs.witness].nu) == std::abs(vs.witness_nu));

    const SurfacePatch cylinder = SurfacePatch::parse("cos(u)", "sin(u)", "v", {-10, 10}, {-10, 10});
    const auto dc = decompose(cylinder, CurveOnSurface::parse("t", "0.5*t", {0, 6}));
    const RectifyingVerdict vc = classify_darboux_rectifying(dc);
    CHECK_FALSE(vc.rectifying);
    CHECK(std::abs(std::abs(vc.witness_nu) - 1.0) <= 1e-12);
  }

  TEST_CASE("reconstruction at every sample") {
    const SurfacePatch paraboloid = SurfacePatch::parse("u", "v", "u^2 - 0.3*v^2", {-3, 3}, {-3, 3});
    const auto samples = sample_curve(paraboloid, CurveOnSurface::parse("cos(t)", "sin(2*t)", {0, 6}), 40);
    const auto d = decompose_position(samples);
    REQUIRE(d.samples.size() == samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& f = samples[i];
      const auto& c = d.samples[i];
      const Vec3 r = c.lambda * f.T + c.mu * f.P + c.nu * f.U;
      CHECK(oracle::dist(r, f.point) <= 1e-10 * (1 + norm(f.point)));
    }
    CHECK(d.max_reconstruction_error <= 1e-10);
  }

  TEST_CASE("translating the patch shifts nu by c . U") {
    auto g = oracle::rng(12);
    for (int trial = 0; trial < 10; ++trial) {
      const Vec3 c{oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2)};
      const auto shifted = [&](double k, const char* base) {
        return std::string("(") + base + ") + " + std::to_string(k);
      };
      const char* X = "cosh(v)*cos(u)";
      const char* Y = "cosh(v)*sin(u)";
      const char* Z = "v";
      const SurfacePatch a = SurfacePatch::parse(X, Y, Z, {-10, 10}, {-2, 2});
      const SurfacePatch b = SurfacePatch::parse(shifted(c.x, X), shifted(c.y, Y), shifted(c.z, Z), {-10, 10}, {-2, 2});
      // std::to_string rounds to six decimals; use the parsed offset.
      const Vec3 offset = b.point(0.3, 0.2) - a.point(0.3, 0.2);
      const CurveOnSurface curve = CurveOnSurface::parse("t", "0.3*cos(t)", {0, 5});
      const auto sa = sample_curve(a, curve, 16), sb = sample_curve(b, curve, 16);
      const auto da = decompose_position(sa), db = decompose_position(sb);
      for (std::size_t i = 0; i < sa.size(); ++i)
        CHECK(std::abs(db.samples[i].nu - da.samples[i].nu - dot(offset, sa[i].U)) <= 1e-10);
    }
  }

  TEST_CASE("explicit tolerance and witness index") {
    const SurfacePatch lifted = SurfacePatch::parse("u", "v", "0.001", {-5, 5}, {-5, 5});
    const auto d = decompose(lifted, CurveOnSurface::parse("t", "1", {0, 3}), 10);
    CHECK_FALSE(classify_darboux_rectifying(d).rectifying);
    CHECK(classify_darboux_rectifying(d, 1e-2).rectifying);
    CHECK(d.max_nu_index < d.samples.size());
    CHECK(std::abs(d.samples[d.max_nu_index].nu) == doctest::Approx(d.max_abs_nu));
  }
}
