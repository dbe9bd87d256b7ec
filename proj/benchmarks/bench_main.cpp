#include <benchmark/benchmark.h>

#include <array>

#include "darboux/expr.hpp"
#include "darboux/geom.hpp"
#include "darboux/runner.hpp"
#include "darboux/scenario.hpp"

using namespace darboux;

namespace {

void BM_ExprJet2(benchmark::State& state) {
  const expr::Expr e = expr::Expr::parse("sinh(v)*cos(u) + log(1 + u^2 + v^2)", {"u", "v"});
  double u = 0.3;
  for (auto _ : state) {
    const std::array<Jet2, 2> args{Jet2::variable_u(u), Jet2::variable_v(0.7)};
    benchmark::DoNotOptimize(e.eval<Jet2>(args));
    u += 1e-9;
  }
}
BENCHMARK(BM_ExprJet2);

void BM_FrameSample(benchmark::State& state) {
  const SurfacePatch cat =
      SurfacePatch::parse("cosh(v)*cos(u)", "cosh(v)*sin(u)", "v", {-1, 7}, {-2, 2});
  const CurveOnSurface curve = CurveOnSurface::parse("t", "0.3 + 0.2*sin(t)", {0, 6});
  for (auto _ : state) benchmark::DoNotOptimize(frame_sample(cat, curve, 1.1));
}
BENCHMARK(BM_FrameSample);

void BM_SampleCurve(benchmark::State& state) {
  const SurfacePatch cat =
      SurfacePatch::parse("cosh(v)*cos(u)", "cosh(v)*sin(u)", "v", {-1, 7}, {-2, 2});
  const CurveOnSurface curve = CurveOnSurface::parse("t", "0.3 + 0.2*sin(t)", {0, 6});
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_curve(cat, curve, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SampleCurve)->Arg(16)->Arg(64);

void BM_DemoRun(benchmark::State& state) {
  const Scenario s = load_scenario("demo:helicoid-catenoid");
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s));
  state.SetLabel("helicoid-catenoid");
}
BENCHMARK(BM_DemoRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
