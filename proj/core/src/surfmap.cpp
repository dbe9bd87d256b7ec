#include "darboux/surfmap.hpp"

#include <algorithm>
#include <cmath>

#include "darboux/arclength.hpp"

namespace darboux {
namespace {

Interval intersect(Interval a, Interval b) { return {std::max(a.min, b.min), std::min(a.max, b.max)}; }

double normalized_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}

}  // namespace

SurfaceCorrespondence::SurfaceCorrespondence(SurfacePatch source, SurfacePatch target,
                                             std::optional<expr::Expr> rho)
    : source_(std::move(source)),
      target_(std::move(target)),
      rho_(std::move(rho)),
      u_domain_(intersect(source_.u_domain(), target_.u_domain())),
      v_domain_(intersect(source_.v_domain(), target_.v_domain())) {
  if (!(u_domain_.width() > 0.0) || !(v_domain_.width() > 0.0))
    throw ConfigError("source and target patches share no parameter domain");
  if (rho_ && rho_->variables() != std::vector<std::string>{"u", "v"})
    throw ConfigError("dilation expression must be declared over {u, v}");
}

Jet2 SurfaceCorrespondence::rho_jet(double u, double v) const {
  if (rho_) {
    const std::array<Jet2, 2> in{Jet2::variable_u(u, 1), Jet2::variable_v(v, 1)};
    const Jet2 r = rho_->eval<Jet2>(std::span<const Jet2>(in));
    if (!(r.value() > 0.0))
      throw ConfigError("declared dilation factor is not positive at (" + std::to_string(u) +
                        ", " + std::to_string(v) + ")");
    return r;
  }
  const MetricJets src = metric_jets(source_.evaluate(u, v));
  const MetricJets tgt = metric_jets(target_.evaluate(u, v));
  return sqrt(tgt.E / src.E);
}

std::vector<std::array<double, 2>> grid_points(const SurfaceCorrespondence& corr,
                                               const SampleGrid& grid) {
  if (grid.nu == 0 || grid.nv == 0) throw ConfigError("sample grid must be nonempty");
  std::vector<std::array<double, 2>> pts;
  pts.reserve(grid.nu * grid.nv);
  const Interval ud = corr.u_domain(), vd = corr.v_domain();
  for (std::size_t i = 0; i < grid.nu; ++i)
    for (std::size_t j = 0; j < grid.nv; ++j)
      pts.push_back({ud.min + ud.width() * (static_cast<double>(i) + 0.5) / static_cast<double>(grid.nu),
                     vd.min + vd.width() * (static_cast<double>(j) + 0.5) / static_cast<double>(grid.nv)});
  return pts;
}

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Isometry: return "isometry";
    case MapKind::Homothety: return "homothety";
    case MapKind::Conformal: return "conformal";
    case MapKind::General: return "general";
  }
  return "general";
}

std::optional<MapKind> map_kind_from_string(std::string_view name) {
  for (MapKind k : {MapKind::Isometry, MapKind::Homothety, MapKind::Conformal, MapKind::General})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

MapClassification classify_map(const SurfaceCorrespondence& corr, const SampleGrid& grid,
                               double tolerance) {
  MapClassification c;
  c.tolerance = tolerance;
  double lo = 0.0, hi = 0.0, sum = 0.0;
  for (const auto& [u, v] : grid_points(corr, grid)) {
    const FirstForm a = first_form(corr.source(), u, v);
    const FirstForm b = first_form(corr.target(), u, v);
    MapGridSample s;
    s.u = u;
    s.v = v;
    s.rho2_hat = b.E / a.E;
    const double scale = 1.0 + std::abs(b.E) + std::abs(b.G);
    s.conformal_residual =
        std::max(std::abs(b.F - s.rho2_hat * a.F), std::abs(b.G - s.rho2_hat * a.G)) / scale;
    s.isometry_residual =
        std::max({std::abs(b.E - a.E), std::abs(b.F - a.F), std::abs(b.G - a.G)});
    if (corr.declared_rho()) {
      const double r = corr.rho_jet(u, v).value();
      s.declared_rho2 = r * r;
      c.max_declared_rho2_deviation =
          std::max(c.max_declared_rho2_deviation.value_or(0.0), std::abs(r * r - s.rho2_hat));
    }
    if (c.samples.empty()) lo = hi = s.rho2_hat;
    lo = std::min(lo, s.rho2_hat);
    hi = std::max(hi, s.rho2_hat);
    sum += s.rho2_hat;
    c.max_conformal_residual = std::max(c.max_conformal_residual, s.conformal_residual);
    c.max_isometry_residual = std::max(c.max_isometry_residual, s.isometry_residual);
    c.max_rho2_minus_one = std::max(c.max_rho2_minus_one, std::abs(s.rho2_hat - 1.0));
    c.samples.push_back(s);
  }
  c.c_squared = sum / static_cast<double>(c.samples.size());
  c.rho2_spread = (hi - lo) / c.c_squared;

  c.kind = MapKind::General;
  if (c.max_conformal_residual <= tolerance) {
    c.kind = MapKind::Conformal;
    if (c.rho2_spread <= tolerance) {
      c.kind = MapKind::Homothety;
      if (c.max_rho2_minus_one <= tolerance) c.kind = MapKind::Isometry;
    }
  }
  return c;
}

PartialTransferReport conformal_partial_check(const SurfaceCorrespondence& corr,
                                              const SampleGrid& grid) {
  PartialTransferReport r;
  r.declared_rho = corr.declared_rho().has_value();
  if (!r.declared_rho && classify_map(corr, grid).kind == MapKind::General)
    throw ConfigError("partial-transfer check needs a declared dilation factor for a general map");
  for (const auto& [u, v] : grid_points(corr, grid)) {
    const MetricJets a = metric_jets(corr.source().evaluate(u, v));
    const MetricJets b = metric_jets(corr.target().evaluate(u, v));
    const Jet2 rho = corr.rho_jet(u, v);
    const double p = rho.value();
    const std::array<std::pair<const Jet2*, const Jet2*>, 3> coeffs{
        {{&a.E, &b.E}, {&a.F, &b.F}, {&a.G, &b.G}}};
    for (std::size_t k = 0; k < 3; ++k) {
      const Jet2& src = *coeffs[k].first;
      const Jet2& tgt = *coeffs[k].second;
      const double ru = normalized_gap(tgt.du(), 2.0 * p * rho.du() * src.value() + p * p * src.du());
      const double rv = normalized_gap(tgt.dv(), 2.0 * p * rho.dv() * src.value() + p * p * src.dv());
      r.max_residual[2 * k] = std::max(r.max_residual[2 * k], ru);
      r.max_residual[2 * k + 1] = std::max(r.max_residual[2 * k + 1], rv);
    }
    ++r.points;
  }
  r.max = *std::max_element(r.max_residual.begin(), r.max_residual.end());
  return r;
}

Vec3 push_tangent(const FrameSample& source, const FrameSample& barred, const Vec3& w) {
  const FirstForm& g = source.first;
  const double wu = dot(w, source.eta_u);
  const double wv = dot(w, source.eta_v);
  const double det = g.det();
  const double a = (g.G * wu - g.F * wv) / det;
  const double b = (g.E * wv - g.F * wu) / det;
  return barred.eta_u * a + barred.eta_v * b;
}

std::vector<PushedSample> pushforward_curve(const SurfaceCorrespondence& corr,
                                            const CurveOnSurface& curve,
                                            std::span<const FrameSample> source,
                                            const PositionDecomposition& decomposition) {
  if (decomposition.samples.size() != source.size())
    throw ConfigError("decomposition does not match the curve samples");
  // The barred curve is always measured by its own arc length.
  const CurveOnSurface barred_curve(curve.u_expr(), curve.v_expr(), curve.t_range(),
                                    ParamMode::Reparametrize);
  const ArcLength barred_length = arc_length(corr.target(), barred_curve);

  std::vector<PushedSample> out;
  out.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const FrameSample& f = source[i];
    const PositionComponents& c = decomposition.samples[i];
    PushedSample p;
    p.barred = frame_sample(corr.target(), barred_curve, f.t, barred_length.s_of_t(f.t));
    p.coefficient_vector = p.barred.T * c.lambda + p.barred.P * c.mu;
    p.pushed = push_tangent(f, p.barred, f.T * c.lambda + f.P * c.mu);
    p.rho2_hat = p.barred.first.E / f.first.E;
    out.push_back(p);
  }
  return out;
}

}  // namespace darboux
