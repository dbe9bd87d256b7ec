#include "darboux/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace darboux {
namespace {

struct FdMetric {
  double E, F, G;
  Vec3 eta_u, eta_v;
};

FdMetric fd_metric(const SurfacePatch& p, double u, double v, double h) {
  const Vec3 eu = (p.point(u + h, v) - p.point(u - h, v)) / (2.0 * h);
  const Vec3 ev = (p.point(u, v + h) - p.point(u, v - h)) / (2.0 * h);
  return {dot(eu, eu), dot(eu, ev), dot(ev, ev), eu, ev};
}

struct Deviation {
  double value = 0.0;
  std::string curve;
  double t = 0.0;
};

double relative(double fd, double jet) { return std::abs(fd - jet) / std::max(1.0, std::abs(jet)); }

const std::array<const char*, 12> kNames{"E", "F", "G", "E_u", "E_v", "F_u", "F_v", "G_u", "G_v",
                                         "kappa", "kappa_n", "A"};

// Shrinking the step tenfold should shrink truncation error a hundredfold; growth
// by more than this factor means rounding noise dominates.
constexpr double kNoiseGrowth = 10.0;

}  // namespace

OracleReport fd_oracle(const Scenario& scenario, const ScenarioModel& model, double step) {
  if (!(step >= kOracleMinStep && step <= kOracleMaxStep))
    throw ConfigError("fd step must lie in [1e-7, 1e-3]");
  const double h = step;
  const double H = 10.0 * step;
  std::array<Deviation, kNames.size()> worst;
  std::size_t count = 0;

  for (const CurveSpec& spec : scenario.curves) {
    const SurfacePatch& patch = model.surface(spec.surface);
    const CurveOnSurface& curve = model.curve(spec.name);
    const auto uv = [&](double t) {
      const std::array<double, 1> in{t};
      return std::array<double, 2>{curve.u_expr().value(in), curve.v_expr().value(in)};
    };
    const auto gamma = [&](double t) {
      const auto c = uv(t);
      return patch.point(c[0], c[1]);
    };

    for (const FrameSample& f : sample_curve(patch, curve, spec.samples)) {
      const double t = f.t, u = f.u, v = f.v;
      const FdMetric m = fd_metric(patch, u, v, h);
      const FdMetric mu_p = fd_metric(patch, u + H, v, h), mu_m = fd_metric(patch, u - H, v, h);
      const FdMetric mv_p = fd_metric(patch, u, v + H, h), mv_m = fd_metric(patch, u, v - H, h);
      FirstForm g;
      g.E = m.E;
      g.F = m.F;
      g.G = m.G;
      g.Eu = (mu_p.E - mu_m.E) / (2.0 * H);
      g.Ev = (mv_p.E - mv_m.E) / (2.0 * H);
      g.Fu = (mu_p.F - mu_m.F) / (2.0 * H);
      g.Fv = (mv_p.F - mv_m.F) / (2.0 * H);
      g.Gu = (mu_p.G - mu_m.G) / (2.0 * H);
      g.Gv = (mv_p.G - mv_m.G) / (2.0 * H);

      // Ambient curve derivatives.
      const Vec3 g_t = (gamma(t + h) - gamma(t - h)) / (2.0 * h);
      const Vec3 g_tt = (gamma(t + H) - gamma(t) * 2.0 + gamma(t - H)) / (H * H);
      const double sigma = norm(g_t);
      const double kappa = norm(cross(g_t, g_tt)) / (sigma * sigma * sigma);
      const Vec3 U = normalized(cross(m.eta_u, m.eta_v));
      const double kappa_n = dot(g_tt, U) / (sigma * sigma);

      // Arc-length derivatives of (u, v).
      const auto cp = uv(t + h), cm = uv(t - h), cP = uv(t + H), cM = uv(t - H), c0 = uv(t);
      CurveDerivatives d;
      d.u = u;
      d.v = v;
      d.u_t = (cp[0] - cm[0]) / (2.0 * h);
      d.v_t = (cp[1] - cm[1]) / (2.0 * h);
      d.u_tt = (cP[0] - 2.0 * c0[0] + cM[0]) / (H * H);
      d.v_tt = (cP[1] - 2.0 * c0[1] + cM[1]) / (H * H);
      d.sigma = sigma;
      d.sigma_t = dot(g_t, g_tt) / sigma;
      const double s3 = sigma * sigma * sigma;
      d.up = d.u_t / sigma;
      d.vp = d.v_t / sigma;
      d.upp = (d.u_tt * sigma - d.u_t * d.sigma_t) / s3;
      d.vpp = (d.v_tt * sigma - d.v_t * d.sigma_t) / s3;

      const std::array<double, kNames.size()> fd{g.E,  g.F,  g.G,  g.Eu,  g.Ev,    g.Fu,
                                                 g.Fv, g.Gu, g.Gv, kappa, kappa_n, compute_A(g, d)};
      const FirstForm& j = f.first;
      const std::array<double, kNames.size()> jet{j.E,  j.F,  j.G,  j.Eu,    j.Ev,      j.Fu,
                                                  j.Fv, j.Gu, j.Gv, f.kappa, f.kappa_n, compute_A(j, f.derivs)};
      for (std::size_t k = 0; k < kNames.size(); ++k) {
        const double dev = relative(fd[k], jet[k]);
        if (dev > worst[k].value || std::isnan(dev)) worst[k] = {dev, spec.name, t};
      }
      ++count;
    }
  }

  OracleReport r;
  r.step = step;
  r.samples = count;
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    r.quantities.push_back({kNames[k], worst[k].value, worst[k].curve, worst[k].t});
    r.worst = std::max(r.worst, worst[k].value);
    if (std::isnan(worst[k].value)) r.worst = worst[k].value;
  }
  return r;
}

OracleSweep fd_oracle_sweep(const Scenario& scenario, const ScenarioModel& model,
                            const std::vector<double>& steps) {
  OracleSweep sweep;
  for (double h : steps) sweep.reports.push_back(fd_oracle(scenario, model, h));
  for (std::size_t i = 0; i + 1 < sweep.reports.size(); ++i) {
    if (!(sweep.reports[i + 1].worst < 0.1 * sweep.reports[i].worst)) {
      sweep.plateau = i + 1;
      break;
    }
  }
  return sweep;
}

bool step_too_small(const Scenario& scenario, const ScenarioModel& model, double step) {
  const double here = fd_oracle(scenario, model, step).worst;
  const double coarser = fd_oracle(scenario, model, std::min(10.0 * step, kOracleMaxStep)).worst;
  return here > kNoiseGrowth * coarser;
}

}  // namespace darboux
