#include "darboux/geom.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "darboux/arclength.hpp"

namespace darboux {
namespace {

Vec3 vec(const std::array<Jet2, 3>& c, double (Jet2::*slot)() const) {
  return {(c[0].*slot)(), (c[1].*slot)(), (c[2].*slot)()};
}

std::string location(double u, double v) {
  std::ostringstream os;
  os.precision(17);
  os << "(u, v) = (" << u << ", " << v << ")";
  return os.str();
}

void require_regular(const SurfaceJet& s, double det) {
  if (!(det > kRegularityTolerance)) {
    std::ostringstream os;
    os << "degenerate patch at " << location(s.u, s.v) << ": EG - F^2 = " << det;
    throw RegularityError(os.str(), s.u, s.v);
  }
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b)); }

}  // namespace

SurfacePatch::SurfacePatch(expr::Expr x, expr::Expr y, expr::Expr z, Interval u_domain,
                           Interval v_domain)
    : components_{std::move(x), std::move(y), std::move(z)},
      u_domain_(u_domain),
      v_domain_(v_domain) {
  for (const auto& c : components_)
    if (c.variables() != std::vector<std::string>{"u", "v"})
      throw ConfigError("surface component '" + c.source() + "' must be declared over {u, v}");
  if (!(u_domain.width() > 0.0) || !(v_domain.width() > 0.0))
    throw ConfigError("surface domain must be a nondegenerate rectangle");
}

SurfacePatch SurfacePatch::parse(std::string_view x, std::string_view y, std::string_view z,
                                 Interval u_domain, Interval v_domain) {
  const std::vector<std::string> vars{"u", "v"};
  return SurfacePatch(expr::Expr::parse(x, vars), expr::Expr::parse(y, vars),
                      expr::Expr::parse(z, vars), u_domain, v_domain);
}

bool SurfacePatch::contains(double u, double v) const {
  const double su = 1e-12 * (1.0 + u_domain_.width());
  const double sv = 1e-12 * (1.0 + v_domain_.width());
  return u_domain_.contains(u, su) && v_domain_.contains(v, sv);
}

std::array<Jet2, 3> SurfacePatch::jets(const Jet2& u, const Jet2& v) const {
  const std::array<Jet2, 2> in{u, v};
  const std::span<const Jet2> args(in);
  return {components_[0].eval<Jet2>(args), components_[1].eval<Jet2>(args),
          components_[2].eval<Jet2>(args)};
}

SurfaceJet SurfacePatch::evaluate(double u, double v) const {
  SurfaceJet s;
  s.u = u;
  s.v = v;
  s.components = jets(Jet2::variable_u(u), Jet2::variable_v(v));
  s.point = vec(s.components, &Jet2::value);
  s.eta_u = vec(s.components, &Jet2::du);
  s.eta_v = vec(s.components, &Jet2::dv);
  s.eta_uu = vec(s.components, &Jet2::duu);
  s.eta_uv = vec(s.components, &Jet2::duv);
  s.eta_vv = vec(s.components, &Jet2::dvv);
  return s;
}

Vec3 SurfacePatch::point(double u, double v) const {
  const std::array<double, 2> in{u, v};
  return {components_[0].value(in), components_[1].value(in), components_[2].value(in)};
}

MetricJets metric_jets(const SurfaceJet& s) {
  MetricJets m{Jet2(0.0, 1), Jet2(0.0, 1), Jet2(0.0, 1)};
  for (const auto& c : s.components) {
    const Jet2 pu = c.partial_u();
    const Jet2 pv = c.partial_v();
    m.E += pu * pu;
    m.F += pu * pv;
    m.G += pv * pv;
  }
  return m;
}

std::array<Jet2, 3> normal_jets(const SurfaceJet& s) {
  std::array<Jet2, 3> pu, pv;
  for (std::size_t i = 0; i < 3; ++i) {
    pu[i] = s.components[i].partial_u();
    pv[i] = s.components[i].partial_v();
  }
  const std::array<Jet2, 3> n{pu[1] * pv[2] - pu[2] * pv[1], pu[2] * pv[0] - pu[0] * pv[2],
                              pu[0] * pv[1] - pu[1] * pv[0]};
  const Jet2 n2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
  require_regular(s, n2.value());
  const Jet2 len = sqrt(n2);
  return {n[0] / len, n[1] / len, n[2] / len};
}

FirstForm first_form(const SurfaceJet& s) {
  const MetricJets m = metric_jets(s);
  FirstForm f;
  f.E = m.E.value();
  f.F = m.F.value();
  f.G = m.G.value();
  f.Eu = m.E.du();
  f.Ev = m.E.dv();
  f.Fu = m.F.du();
  f.Fv = m.F.dv();
  f.Gu = m.G.du();
  f.Gv = m.G.dv();
  require_regular(s, f.det());
  // E_u through the jet of E must agree with 2 eta_uu . eta_u.
  if (!close(f.Eu, 2.0 * dot(s.eta_uu, s.eta_u), 1e-10))
    throw std::logic_error("first fundamental form self-check failed at " + location(s.u, s.v));
  return f;
}

FirstForm first_form(const SurfacePatch& patch, double u, double v) {
  return first_form(patch.evaluate(u, v));
}

Vec3 unit_normal(const SurfaceJet& s) {
  const Vec3 n = cross(s.eta_u, s.eta_v);
  const double det = dot(n, n);
  require_regular(s, det);
  return n / std::sqrt(det);
}

Vec3 unit_normal(const SurfacePatch& patch, double u, double v) {
  return unit_normal(patch.evaluate(u, v));
}

SecondForm second_form(const SurfaceJet& s) {
  const Vec3 U = unit_normal(s);
  return {dot(s.eta_uu, U), dot(s.eta_uv, U), dot(s.eta_vv, U)};
}

SecondForm second_form(const SurfacePatch& patch, double u, double v) {
  return second_form(patch.evaluate(u, v));
}

CurveOnSurface::CurveOnSurface(expr::Expr u, expr::Expr v, Interval t_range, ParamMode mode)
    : u_(std::move(u)), v_(std::move(v)), t_range_(t_range), mode_(mode) {
  for (const auto* e : {&u_, &v_})
    if (e->variables() != std::vector<std::string>{"t"})
      throw ConfigError("curve coordinate '" + e->source() + "' must be declared over {t}");
  if (!(t_range.width() > 0.0)) throw ConfigError("curve t-range must be nondegenerate");
}

CurveOnSurface CurveOnSurface::parse(std::string_view u, std::string_view v, Interval t_range,
                                     ParamMode mode) {
  const std::vector<std::string> vars{"t"};
  return CurveOnSurface(expr::Expr::parse(u, vars), expr::Expr::parse(v, vars), t_range, mode);
}

std::array<Jet1, 2> CurveOnSurface::jets(double t, int order) const {
  const std::array<Jet1, 1> in{Jet1::variable(t, order)};
  const std::span<const Jet1> args(in);
  return {u_.eval<Jet1>(args), v_.eval<Jet1>(args)};
}

CurveDerivatives curve_s_derivatives(const SurfaceJet& s, const std::array<Jet1, 2>& c,
                                     ParamMode mode) {
  CurveDerivatives d;
  d.u = c[0].value();
  d.v = c[1].value();
  d.u_t = c[0][1];
  d.u_tt = c[0][2];
  d.v_t = c[1][1];
  d.v_tt = c[1][2];

  const Vec3 g_t = s.eta_u * d.u_t + s.eta_v * d.v_t;
  const Vec3 g_tt = s.eta_u * d.u_tt + s.eta_v * d.v_tt + s.eta_uu * (d.u_t * d.u_t) +
                    s.eta_uv * (2.0 * d.u_t * d.v_t) + s.eta_vv * (d.v_t * d.v_t);
  d.sigma = norm(g_t);
  if (!(d.sigma > kSpeedTolerance)) {
    std::ostringstream os;
    os << "stationary curve point at " << location(d.u, d.v) << ": speed " << d.sigma;
    throw CurveError(os.str());
  }
  if (mode == ParamMode::AssertUnitSpeed && std::abs(d.sigma - 1.0) > kUnitSpeedTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "curve is not unit speed at " << location(d.u, d.v) << ": speed " << d.sigma;
    throw CurveError(os.str());
  }
  d.sigma_t = dot(g_t, g_tt) / d.sigma;
  const double s3 = d.sigma * d.sigma * d.sigma;
  d.up = d.u_t / d.sigma;
  d.vp = d.v_t / d.sigma;
  d.upp = (d.u_tt * d.sigma - d.u_t * d.sigma_t) / s3;
  d.vpp = (d.v_tt * d.sigma - d.v_t * d.sigma_t) / s3;
  return d;
}

namespace {

std::array<Jet1, 2> curve_jets_in_domain(const SurfacePatch& patch, const CurveOnSurface& curve,
                                         double t, int order) {
  auto c = curve.jets(t, order);
  if (!patch.contains(c[0].value(), c[1].value())) {
    std::ostringstream os;
    os.precision(17);
    os << "curve leaves the patch domain at t = " << t << ": " << location(c[0].value(), c[1].value());
    throw CurveError(os.str());
  }
  return c;
}

}  // namespace

CurveDerivatives curve_s_derivatives(const SurfacePatch& patch, const CurveOnSurface& curve,
                                     double t) {
  const auto c = curve_jets_in_domain(patch, curve, t, Jet1::kMaxOrder);
  auto d = curve_s_derivatives(patch.evaluate(c[0].value(), c[1].value()), c, curve.mode());
  d.t = t;
  return d;
}

double curve_speed(const SurfacePatch& patch, const CurveOnSurface& curve, double t) {
  const auto c = curve_jets_in_domain(patch, curve, t, 1);
  const auto comps = patch.jets(Jet2::variable_u(c[0].value(), 1), Jet2::variable_v(c[1].value(), 1));
  const Vec3 eta_u{comps[0].du(), comps[1].du(), comps[2].du()};
  const Vec3 eta_v{comps[0].dv(), comps[1].dv(), comps[2].dv()};
  return norm(eta_u * c[0][1] + eta_v * c[1][1]);
}

FrameSample frame_sample(const SurfacePatch& patch, const CurveOnSurface& curve, double t,
                         double s) {
  const auto c = curve_jets_in_domain(patch, curve, t, Jet1::kMaxOrder);
  const SurfaceJet sj = patch.evaluate(c[0].value(), c[1].value());

  FrameSample f;
  f.t = t;
  f.s = s;
  f.u = sj.u;
  f.v = sj.v;
  f.point = sj.point;
  f.eta_u = sj.eta_u;
  f.eta_v = sj.eta_v;
  f.first = first_form(sj);
  f.second = second_form(sj);
  f.derivs = curve_s_derivatives(sj, c, curve.mode());
  f.derivs.t = t;

  const double up = f.derivs.up, vp = f.derivs.vp;
  const double upp = f.derivs.upp, vpp = f.derivs.vpp;

  f.T = sj.eta_u * up + sj.eta_v * vp;
  f.T_prime = sj.eta_u * upp + sj.eta_v * vpp + sj.eta_uu * (up * up) +
              sj.eta_uv * (2.0 * up * vp) + sj.eta_vv * (vp * vp);
  f.U = unit_normal(sj);
  f.P = cross(f.U, f.T);

  f.kappa = norm(f.T_prime);
  f.kappa_g = dot(f.T_prime, f.P);
  f.kappa_n = dot(f.T_prime, f.U);
  f.normal_curvature_route_gap = std::abs(f.kappa_n - f.second.contract(up, vp));

  // tau_g = P'.U = -P.U', with U' = U_u u' + U_v v'.
  const auto nj = normal_jets(sj);
  const Vec3 U_s{nj[0].du() * up + nj[0].dv() * vp, nj[1].du() * up + nj[1].dv() * vp,
                 nj[2].du() * up + nj[2].dv() * vp};
  f.tau_g = -dot(f.P, U_s);

  if (f.kappa >= kCurvatureTolerance) {
    f.frenet_defined = true;
    f.N = f.T_prime / f.kappa;
    f.B = cross(f.T, f.N);
    // Expanded (T x T')/kappa over the coordinate basis.
    const Vec3 expanded =
        (cross(sj.eta_u, sj.eta_v) * (up * vpp - vp * upp) +
         cross(sj.eta_u, sj.eta_uu) * (up * up * up) +
         cross(sj.eta_u, sj.eta_uv) * (2.0 * up * up * vp) +
         cross(sj.eta_u, sj.eta_vv) * (up * vp * vp) +
         cross(sj.eta_v, sj.eta_uu) * (up * up * vp) +
         cross(sj.eta_v, sj.eta_uv) * (2.0 * up * vp * vp) +
         cross(sj.eta_v, sj.eta_vv) * (vp * vp * vp)) /
        f.kappa;
    f.binormal_route_gap = norm(expanded - f.B);
    f.alpha = std::atan2(dot(f.P, f.B), dot(f.P, f.N));
  }
  return f;
}

std::vector<FrameSample> sample_curve(const SurfacePatch& patch, const CurveOnSurface& curve,
                                      std::size_t n) {
  if (n < 2) throw ConfigError("at least two curve samples are required");
  std::vector<FrameSample> out;
  out.reserve(n);
  const Interval tr = curve.t_range();
  if (curve.mode() == ParamMode::AssertUnitSpeed) {
    for (std::size_t k = 0; k < n; ++k) {
      const double t = tr.min + tr.width() * static_cast<double>(k) / static_cast<double>(n - 1);
      out.push_back(frame_sample(patch, curve, t, t - tr.min));
    }
    return out;
  }
  const ArcLength table = arc_length(patch, curve);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = table.total() * static_cast<double>(k) / static_cast<double>(n - 1);
    out.push_back(frame_sample(patch, curve, table.t_of_s(s), s));
  }
  return out;
}

}  // namespace darboux
