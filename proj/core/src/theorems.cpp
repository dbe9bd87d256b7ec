#include "darboux/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace darboux {
namespace {

double gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

class ReportBuilder {
 public:
  ReportBuilder(std::string id, std::size_t samples) {
    report_.id = std::move(id);
    report_.samples = samples;
  }

  std::size_t add_track(std::string name, double tolerance, bool informational = false) {
    Track t;
    t.name = std::move(name);
    t.tolerance = tolerance;
    t.informational = informational;
    report_.tracks.push_back(std::move(t));
    return report_.tracks.size() - 1;
  }

  void record(std::size_t track, double residual) { report_.tracks[track].residuals.push_back(residual); }
  void skip() { ++report_.skipped; }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  std::size_t skipped() const { return report_.skipped; }

  TheoremReport finish() {
    bool pass = true;
    for (Track& t : report_.tracks) {
      if (!t.residuals.empty()) {
        t.max = *std::max_element(t.residuals.begin(), t.residuals.end(),
                                  [](double a, double b) { return a < b || std::isnan(b); });
        t.mean = std::accumulate(t.residuals.begin(), t.residuals.end(), 0.0) /
                 static_cast<double>(t.residuals.size());
      }
      t.pass = t.max <= t.tolerance;  // NaN fails
      if (!t.informational) pass = pass && t.pass;
    }
    if (report_.samples > 0 &&
        static_cast<double>(report_.skipped) > kMaxSkippedFraction * static_cast<double>(report_.samples)) {
      pass = false;
      note("too many curvature-degenerate samples: " + std::to_string(report_.skipped) + " of " +
           std::to_string(report_.samples));
    }
    if (!report_.tracks.empty()) {
      const Track& primary = report_.tracks.front();
      report_.residuals = primary.residuals;
      report_.max = primary.max;
      report_.mean = primary.mean;
      report_.tolerance = primary.tolerance;
    }
    report_.pass = pass;
    return std::move(report_);
  }

 private:
  TheoremReport report_;
};

const SurfaceCorrespondence& map_of(const MappedCurve& mc) {
  if (mc.map == nullptr) throw ConfigError("mapped curve carries no correspondence");
  return *mc.map;
}

void require_kind(const MappedCurve& mc, MapKind weakest, const char* id) {
  const MapKind k = mc.classification.kind;
  if (static_cast<int>(k) > static_cast<int>(weakest))
    throw ConfigError(std::string(id) + " requires a map of kind " + std::string(to_string(weakest)) +
                      " or more specific; classified as " + std::string(to_string(k)));
}

void require_rectifying(const MappedCurve& mc, const char* id) {
  if (!mc.rectifying.rectifying)
    throw ConfigError(std::string(id) + " requires a Darboux rectifying source curve; max |nu| = " +
                      fmt(std::abs(mc.rectifying.witness_nu)));
}

void note_rectifying(const MappedCurve& mc, ReportBuilder& b) {
  if (!mc.rectifying.rectifying)
    b.note("source curve is not Darboux rectifying (max |nu| = " +
           fmt(std::abs(mc.rectifying.witness_nu)) +
           "); identities evaluated on lambda T + mu P");
}

Vec3 tangent_part(const FrameSample& f, const PositionComponents& c) { return f.T * c.lambda + f.P * c.mu; }

void require_any_retained(const ReportBuilder& b, std::size_t samples, const char* id) {
  if (samples > 0 && b.skipped() == samples)
    throw ConfigError(std::string(id) + ": all samples are curvature-degenerate");
}

// Shared body of the two "image stays rectifying" checkers.
TheoremReport check_rectifying_transfer(const MappedCurve& mc, const CheckOptions& opts,
                                        const char* id) {
  ReportBuilder b(id, mc.source.size());
  const auto coeff = b.add_track("coefficient_preservation", opts.tolerance);
  const auto scaled = b.add_track("pushed_equals_rho_times_coefficient_vector", opts.tolerance);
  const auto strict = b.add_track("strict_position_in_rectifying_plane", opts.tolerance, true);
  for (std::size_t i = 0; i < mc.source.size(); ++i) {
    const PositionComponents& c = mc.decomposition.samples[i];
    const PushedSample& p = mc.target[i];
    const Vec3& V = p.coefficient_vector;
    const double r = std::abs(dot(V, p.barred.T) - c.lambda) + std::abs(dot(V, p.barred.P) - c.mu) +
                     std::abs(dot(V, p.barred.U));
    b.record(coeff, r / (1.0 + std::abs(c.lambda) + std::abs(c.mu)));
    const Vec3 expected = V * std::sqrt(p.rho2_hat);
    b.record(scaled, norm(p.pushed - expected) / (1.0 + norm(p.pushed) + norm(expected)));
    b.record(strict, std::abs(dot(p.barred.point, p.barred.U)) / (1.0 + norm(p.barred.point)));
  }
  return b.finish();
}

// Shared body of the tangent-component checkers; `scale_by_rho2` selects the
// conformal form, `use_pushed` picks the differential image over lambda T' + mu P'.
void tangent_components(const MappedCurve& mc, const CheckOptions& opts, ReportBuilder& b,
                        std::size_t track, bool scale_by_rho2, bool use_pushed) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (std::size_t i = 0; i < mc.source.size(); ++i) {
    const FrameSample& f = mc.source[i];
    const PushedSample& p = mc.target[i];
    const Vec3 g = tangent_part(f, mc.decomposition.samples[i]);
    const Vec3& gbar = use_pushed ? p.pushed : p.coefficient_vector;
    const double factor = scale_by_rho2 ? p.rho2_hat : 1.0;
    std::vector<std::pair<double, double>> dirs{{1.0, 0.0}, {0.0, 1.0}};
    for (std::size_t k = 0; k < opts.draws; ++k) {
      const double a = coef(rng);
      dirs.emplace_back(a, coef(rng));
    }
    double worst = 0.0;
    for (const auto& [a, bb] : dirs) {
      const double lhs = dot(gbar, p.barred.eta_u * a + p.barred.eta_v * bb);
      const double rhs = factor * dot(g, f.eta_u * a + f.eta_v * bb);
      worst = std::max(worst, gap(lhs, rhs));
    }
    b.record(track, worst);
  }
}

}  // namespace

const Track* TheoremReport::track(std::string_view name) const {
  for (const Track& t : tracks)
    if (t.name == name) return &t;
  return nullptr;
}

MappedCurve map_curve(const SurfaceCorrespondence& corr, const CurveOnSurface& curve,
                      std::size_t samples, const SampleGrid& grid) {
  MappedCurve mc;
  mc.map = &corr;
  mc.source = sample_curve(corr.source(), curve, samples);
  mc.decomposition = decompose_position(mc.source);
  mc.rectifying = classify_darboux_rectifying(mc.decomposition);
  mc.target = pushforward_curve(corr, curve, mc.source, mc.decomposition);
  mc.classification = classify_map(corr, grid);
  return mc;
}

double compute_A(const FirstForm& g, const CurveDerivatives& d) {
  const double E = g.E, F = g.F, G = g.G;
  const double up = d.up, vp = d.vp, upp = d.upp, vpp = d.vpp;
  const double bracket =
      E * G * (up * vpp - upp * vp) + F * F * (upp * vp - up * vpp) +
      up * up * up * (E * (g.Fu - g.Ev / 2.0) - F * (g.Eu / 2.0)) +
      up * up * vp * (E * g.Gu - F * g.Ev - G * g.Eu / 2.0 + F * (g.Fu - g.Ev / 2.0)) +
      up * vp * vp * (E * (g.Gv / 2.0) + F * g.Gu - F * (g.Fv - g.Gu / 2.0) - G * g.Ev) +
      vp * vp * vp * (F * (g.Gv / 2.0) - G * (g.Fv - g.Gu / 2.0));
  const double det = g.det();
  if (!(det > kRegularityTolerance)) throw RegularityError("compute_A: degenerate metric", d.u, d.v);
  return bracket / std::sqrt(det);
}

double compute_psi(const FirstForm& g, const Jet2& rho, const CurveDerivatives& d, double kappa,
                   double mu) {
  const double E = g.E, F = g.F, G = g.G;
  const double up = d.up, vp = d.vp;
  const double rru = rho.value() * rho.du();
  const double rrv = rho.value() * rho.dv();
  const double bracket = up * up * up * (E * E * rrv - E * F * rru) +
                         up * up * vp * (3.0 * E * F * rrv - E * G * rru - 2.0 * F * F * rru) +
                         up * vp * vp * (2.0 * F * F * rrv - 3.0 * F * G * rru + E * G * rrv) +
                         vp * vp * vp * (F * G * rrv - G * G * rru);
  const double det = g.det();
  if (!(det > kRegularityTolerance)) throw RegularityError("compute_psi: degenerate metric", d.u, d.v);
  return mu / (kappa * std::sqrt(det)) * bracket;
}

TheoremReport check_T31(const MappedCurve& mc, const CheckOptions& opts) {
  map_of(mc);
  require_kind(mc, MapKind::Isometry, "T31");
  require_rectifying(mc, "T31");
  return check_rectifying_transfer(mc, opts, "T31");
}

TheoremReport check_T41(const MappedCurve& mc, const CheckOptions& opts) {
  map_of(mc);
  require_kind(mc, MapKind::Conformal, "T41");
  require_rectifying(mc, "T41");
  TheoremReport r = check_rectifying_transfer(mc, opts, "T41");
  if (mc.classification.kind == MapKind::Homothety)
    r.notes.push_back("homothety specialization, c^2 = " + fmt(mc.classification.c_squared));
  return r;
}

TheoremReport check_T32(const MappedCurve& mc, const CheckOptions& opts) {
  map_of(mc);
  require_kind(mc, MapKind::Isometry, "T32");
  ReportBuilder b("T32", mc.source.size());
  note_rectifying(mc, b);
  const auto t = b.add_track("tangent_component", opts.tolerance);
  tangent_components(mc, opts, b, t, false, false);
  b.note(std::to_string(opts.draws) + " random tangent directions per sample plus both axes");
  return b.finish();
}

TheoremReport check_T42(const MappedCurve& mc, const CheckOptions& opts) {
  map_of(mc);
  require_kind(mc, MapKind::Conformal, "T42");
  ReportBuilder b("T42", mc.source.size());
  note_rectifying(mc, b);
  const auto t = b.add_track("tangent_component_rho2_scaling", opts.tolerance);
  const auto unit = b.add_track("tangent_component_rho2_scaling_unit_frame_vector", opts.tolerance, true);
  tangent_components(mc, opts, b, t, true, true);
  tangent_components(mc, opts, b, unit, true, false);
  b.note(std::to_string(opts.draws) + " random tangent directions per sample plus both axes");
  return b.finish();
}

TheoremReport check_T33(const MappedCurve& mc, const CheckOptions& opts) {
  map_of(mc);
  require_kind(mc, MapKind::Isometry, "T33");
  ReportBuilder b("T33", mc.source.size());
  note_rectifying(mc, b);
  const auto rel = b.add_track("normal_component_difference", opts.tolerance);
  const auto src = b.add_track("kappa_normal_component_equals_mu_A", opts.tolerance);
  const auto bar = b.add_track("barred_kappa_normal_component_equals_mu_A", opts.tolerance);
  const auto cor = b.add_track("equal_curvature_invariance", opts.tolerance);
  std::size_t gated = 0;
  for (std::size_t i = 0; i < mc.source.size(); ++i) {
    const FrameSample& f = mc.source[i];
    const PushedSample& p = mc.target[i];
    if (!f.frenet_defined || !p.barred.frenet_defined) {
      b.skip();
      continue;
    }
    const PositionComponents& c = mc.decomposition.samples[i];
    const double gN = dot(tangent_part(f, c), f.N);
    const double gbN = dot(p.coefficient_vector, p.barred.N);
    const double A = compute_A(f.first, f.derivs);
    const double kb = p.barred.kappa;
    b.record(rel, gap(gbN - gN, c.mu * A * (1.0 / kb - 1.0 / f.kappa)));
    b.record(src, gap(f.kappa * gN, c.mu * A));
    b.record(bar, gap(kb * gbN, c.mu * A));
    if (std::abs(f.kappa - kb) <= kEqualityGate) {
      ++gated;
      b.record(cor, gap(gbN, gN));
    }
  }
  require_any_retained(b, mc.source.size(), "T33");
  b.note("equal-curvature invariance evaluated at " + std::to_string(gated) + " sample(s)");
  return b.finish();
}

TheoremReport check_T34(const MappedCurve& mc, const CheckOptions& opts) {
  map_of(mc);
  require_kind(mc, MapKind::Isometry, "T34");
  ReportBuilder b("T34", mc.source.size());
  note_rectifying(mc, b);
  const auto own = b.add_track("binormal_component", opts.tolerance);
  const auto diff = b.add_track("binormal_component_difference", opts.tolerance);
  const auto cor = b.add_track("equal_ratio_invariance", opts.tolerance);
  const auto own_printed = b.add_track("binormal_component_positive_sign", opts.tolerance, true);
  const auto diff_printed = b.add_track("binormal_component_difference_positive_sign", opts.tolerance, true);
  std::size_t gated = 0;
  for (std::size_t i = 0; i < mc.source.size(); ++i) {
    const FrameSample& f = mc.source[i];
    const PushedSample& p = mc.target[i];
    if (!f.frenet_defined || !p.barred.frenet_defined) {
      b.skip();
      continue;
    }
    const PositionComponents& c = mc.decomposition.samples[i];
    const double gB = dot(tangent_part(f, c), f.B);
    const double gbB = dot(p.coefficient_vector, p.barred.B);
    const double ratio = f.kappa_n / f.kappa;
    const double ratio_bar = p.barred.kappa_n / p.barred.kappa;
    // With P = U x T the Frenet binormal is (kappa_g U - kappa_n P) / kappa.
    b.record(own, gap(gB, -c.mu * ratio));
    b.record(diff, gap(gbB - gB, -c.mu * (ratio_bar - ratio)));
    b.record(own_printed, gap(gB, c.mu * ratio));
    b.record(diff_printed, gap(gbB - gB, c.mu * (ratio_bar - ratio)));
    if (std::abs(ratio - ratio_bar) <= kEqualityGate) {
      ++gated;
      b.record(cor, gap(gbB, gB));
    }
  }
  require_any_retained(b, mc.source.size(), "T34");
  b.note("binormal component checked as gamma.B = -mu kappa_n / kappa (P = U x T orientation)");
  b.note("equal-ratio invariance evaluated at " + std::to_string(gated) + " sample(s)");
  return b.finish();
}

TheoremReport check_T43(const MappedCurve& mc, const CheckOptions& opts) {
  const SurfaceCorrespondence& corr = map_of(mc);
  require_kind(mc, MapKind::Conformal, "T43");
  ReportBuilder b("T43", mc.source.size());
  note_rectifying(mc, b);
  const auto bracket = b.add_track("rho2_normal_component_minus_psi", opts.tolerance);
  const auto frame = b.add_track("barred_frame_rho3_scaling", opts.tolerance);
  const auto literal = b.add_track("unit_frame_without_rho3", opts.tolerance, true);
  const auto equal = b.add_track("equal_curvature_form", opts.tolerance, true);
  std::size_t gated = 0;
  for (std::size_t i = 0; i < mc.source.size(); ++i) {
    const FrameSample& f = mc.source[i];
    const PushedSample& p = mc.target[i];
    if (!f.frenet_defined || !p.barred.frenet_defined) {
      b.skip();
      continue;
    }
    const PositionComponents& c = mc.decomposition.samples[i];
    const Jet2 rho = corr.rho_jet(f.u, f.v);
    const double r2 = p.rho2_hat;
    const double gN = dot(tangent_part(f, c), f.N);
    const double gbN = dot(p.coefficient_vector, p.barred.N);
    const double psi = compute_psi(f.first, rho, f.derivs, f.kappa, c.mu);
    const double lhs = f.kappa * (r2 * gN - psi);
    // Barred metric with the source arc-length derivatives.
    b.record(bracket, gap(lhs, c.mu * compute_A(p.barred.first, f.derivs)));
    b.record(frame, gap(lhs, r2 * std::sqrt(r2) * p.barred.kappa * gbN));
    b.record(literal, gap(lhs, p.barred.kappa * gbN));
    if (std::abs(f.kappa - p.barred.kappa) <= kEqualityGate) {
      ++gated;
      b.record(equal, gap(r2 * gN - gbN, psi));
    }
  }
  require_any_retained(b, mc.source.size(), "T43");
  b.note("dilation factor: " + std::string(corr.declared_rho() ? "declared" : "estimated from E'/E"));
  b.note("equal-curvature form evaluated at " + std::to_string(gated) + " sample(s)");
  return b.finish();
}

std::optional<double> monge_scale(const SurfaceJet& s) {
  const double c = s.eta_u.x;
  if (!(c > 0.0)) return std::nullopt;
  const double tol = 1e-12 * (1.0 + c);
  const bool ok = std::abs(s.eta_v.y - c) <= tol && std::abs(s.eta_u.y) <= tol &&
                  std::abs(s.eta_v.x) <= tol && std::abs(s.point.x - c * s.u) <= tol * (1.0 + std::abs(s.u)) &&
                  std::abs(s.point.y - c * s.v) <= tol * (1.0 + std::abs(s.v)) &&
                  std::abs(s.eta_uu.x) <= tol && std::abs(s.eta_uu.y) <= tol &&
                  std::abs(s.eta_uv.x) <= tol && std::abs(s.eta_uv.y) <= tol &&
                  std::abs(s.eta_vv.x) <= tol && std::abs(s.eta_vv.y) <= tol;
  if (!ok) return std::nullopt;
  return c;
}

namespace {

struct MongeCoefficients {
  SecondForm literal;   // height second derivatives over W^2
  SecondForm standard;  // over W
};

MongeCoefficients monge_coefficients(const SurfacePatch& patch, double u, double v, const char* side) {
  const SurfaceJet s = patch.evaluate(u, v);
  const auto c = monge_scale(s);
  if (!c)
    throw ConfigError(std::string("T44 requires Monge patches (c u, c v, h(u, v)); the ") + side +
                      " patch is not of that form at (" + std::to_string(u) + ", " +
                      std::to_string(v) + ")");
  const double hu = s.eta_u.z / *c, hv = s.eta_v.z / *c;
  const double w2 = 1.0 + hu * hu + hv * hv;
  const double w = std::sqrt(w2);
  return {{s.eta_uu.z / w2, s.eta_uv.z / w2, s.eta_vv.z / w2},
          {s.eta_uu.z / w, s.eta_uv.z / w, s.eta_vv.z / w}};
}

double monge_rhs(const SecondForm& src, const SecondForm& bar, double r2, double mu, double kappa,
                 double up, double vp) {
  return mu / kappa *
         (up * up * (bar.L - r2 * src.L) + 2.0 * up * vp * (bar.M - r2 * src.M) +
          vp * vp * (bar.N2 - r2 * src.N2));
}

}  // namespace

TheoremReport check_T44(const MappedCurve& mc, const CheckOptions& opts) {
  const SurfaceCorrespondence& corr = map_of(mc);
  require_kind(mc, MapKind::Conformal, "T44");
  ReportBuilder b("T44", mc.source.size());
  note_rectifying(mc, b);
  const auto src = b.add_track("binormal_component_source", opts.tolerance);
  const auto bar = b.add_track("binormal_component_target", opts.tolerance);
  const auto lit = b.add_track("monge_difference_literal_w2", opts.tolerance, true);
  const auto std_ = b.add_track("monge_difference_standard_w", opts.tolerance, true);
  double disagreement = 0.0;
  for (std::size_t i = 0; i < mc.source.size(); ++i) {
    const FrameSample& f = mc.source[i];
    const PushedSample& p = mc.target[i];
    const MongeCoefficients ms = monge_coefficients(corr.source(), f.u, f.v, "source");
    const MongeCoefficients mb = monge_coefficients(corr.target(), f.u, f.v, "target");
    if (!f.frenet_defined || !p.barred.frenet_defined) {
      b.skip();
      continue;
    }
    const PositionComponents& c = mc.decomposition.samples[i];
    const double gB = dot(tangent_part(f, c), f.B);
    const double gbB = dot(p.coefficient_vector, p.barred.B);
    b.record(src, gap(gB, -c.mu * f.kappa_n / f.kappa));
    b.record(bar, gap(gbB, -c.mu * p.barred.kappa_n / p.barred.kappa));
    const double lhs = gbB - p.rho2_hat * gB;
    const double r_lit = monge_rhs(ms.literal, mb.literal, p.rho2_hat, c.mu, f.kappa, f.derivs.up, f.derivs.vp);
    const double r_std = monge_rhs(ms.standard, mb.standard, p.rho2_hat, c.mu, f.kappa, f.derivs.up, f.derivs.vp);
    b.record(lit, gap(lhs, r_lit));
    b.record(std_, gap(lhs, r_std));
    disagreement = std::max(disagreement, std::abs(r_lit - r_std));
  }
  require_any_retained(b, mc.source.size(), "T44");
  b.note("literal (W^2) vs standard (W) Monge right-hand sides differ by up to " + fmt(disagreement));
  return b.finish();
}

TheoremReport check_frames(std::span<const FrameSample> samples) {
  ReportBuilder b("frames", samples.size());
  const auto darboux = b.add_track("darboux_orthonormality", 1e-9);
  const auto frenet = b.add_track("frenet_orthonormality", 1e-9);
  const auto pyth = b.add_track("curvature_pythagoras", 1e-8);
  const auto rot = b.add_track("rotation_reconstruction", 1e-8);
  const auto kn = b.add_track("normal_curvature_routes", 1e-9);
  const auto bn = b.add_track("binormal_routes", 1e-9);
  const auto ortho = [](const Vec3& a, const Vec3& bb, const Vec3& c) {
    return std::max({std::abs(dot(a, a) - 1.0), std::abs(dot(bb, bb) - 1.0), std::abs(dot(c, c) - 1.0),
                     std::abs(dot(a, bb)), std::abs(dot(a, c)), std::abs(dot(bb, c))});
  };
  for (const FrameSample& f : samples) {
    b.record(darboux, std::max(ortho(f.T, f.P, f.U), norm(f.P - cross(f.U, f.T))));
    b.record(kn, f.normal_curvature_route_gap);
    if (!f.frenet_defined) {
      b.skip();
      continue;
    }
    b.record(frenet, ortho(f.T, f.N, f.B));
    const double k2 = f.kappa * f.kappa;
    b.record(pyth, std::abs(k2 - f.kappa_g * f.kappa_g - f.kappa_n * f.kappa_n) / k2);
    const double ca = std::cos(f.alpha), sa = std::sin(f.alpha);
    b.record(rot, std::max(norm(f.P - (f.N * ca + f.B * sa)), norm(f.U - (f.N * -sa + f.B * ca))));
    b.record(bn, f.binormal_route_gap);
  }
  return b.finish();
}

TheoremReport check_metric_identities(const SurfacePatch& patch, const SampleGrid& grid,
                                      std::span<const FrameSample> samples) {
  std::vector<std::array<double, 2>> points;
  const Interval ud = patch.u_domain(), vd = patch.v_domain();
  for (std::size_t i = 0; i < grid.nu; ++i)
    for (std::size_t j = 0; j < grid.nv; ++j)
      points.push_back({ud.min + ud.width() * (static_cast<double>(i) + 0.5) / static_cast<double>(grid.nu),
                        vd.min + vd.width() * (static_cast<double>(j) + 0.5) / static_cast<double>(grid.nv)});
  for (const FrameSample& f : samples) points.push_back({f.u, f.v});

  ReportBuilder b("metric-identities", points.size());
  const auto t = b.add_track("metric_derivative_identities", 1e-10);
  for (const auto& [u, v] : points) {
    const SurfaceJet s = patch.evaluate(u, v);
    const FirstForm g = first_form(s);
    const double r = std::max({gap(dot(s.eta_uu, s.eta_u), g.Eu / 2.0),
                               gap(dot(s.eta_uv, s.eta_u), g.Ev / 2.0),
                               gap(dot(s.eta_uv, s.eta_v), g.Gu / 2.0),
                               gap(dot(s.eta_vv, s.eta_v), g.Gv / 2.0),
                               gap(dot(s.eta_uu, s.eta_v), g.Fu - g.Ev / 2.0),
                               gap(dot(s.eta_vv, s.eta_u), g.Fv - g.Gu / 2.0)});
    b.record(t, r);
  }
  b.note(std::to_string(grid.nu * grid.nv) + " grid points and " + std::to_string(samples.size()) +
         " curve samples");
  return b.finish();
}

}  // namespace darboux
