#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "darboux/expr.hpp"
#include "darboux/jet.hpp"
#include "darboux/vec3.hpp"

namespace darboux {

inline constexpr double kRegularityTolerance = 1e-12;  // lower bound on EG - F^2
inline constexpr double kSpeedTolerance = 1e-10;       // lower bound on |d gamma / dt|
inline constexpr double kUnitSpeedTolerance = 1e-6;
inline constexpr double kCurvatureTolerance = 1e-8;    // Frenet frame undefined below

struct Interval {
  double min = 0.0;
  double max = 0.0;

  constexpr double width() const { return max - min; }
  constexpr bool contains(double x, double slack = 0.0) const {
    return x >= min - slack && x <= max + slack;
  }
};

/// Value and partials of the embedding at one (u, v).
struct SurfaceJet {
  double u = 0.0;
  double v = 0.0;
  std::array<Jet2, 3> components;
  Vec3 point, eta_u, eta_v, eta_uu, eta_uv, eta_vv;
};

/// Parametric surface eta(u, v) over a rectangle.
class SurfacePatch {
 public:
  SurfacePatch(expr::Expr x, expr::Expr y, expr::Expr z, Interval u_domain, Interval v_domain);

  /// Parse three component expressions over the variables {u, v}.
  static SurfacePatch parse(std::string_view x, std::string_view y, std::string_view z,
                            Interval u_domain, Interval v_domain);

  const expr::Expr& component(std::size_t i) const { return components_[i]; }
  Interval u_domain() const noexcept { return u_domain_; }
  Interval v_domain() const noexcept { return v_domain_; }
  bool contains(double u, double v) const;

  /// Component jets with the given (u, v) jets as inputs.
  std::array<Jet2, 3> jets(const Jet2& u, const Jet2& v) const;
  SurfaceJet evaluate(double u, double v) const;
  Vec3 point(double u, double v) const;

 private:
  std::array<expr::Expr, 3> components_;
  Interval u_domain_;
  Interval v_domain_;
};

/// First fundamental form and its first partials.
struct FirstForm {
  double E = 0.0, F = 0.0, G = 0.0;
  double Eu = 0.0, Ev = 0.0, Fu = 0.0, Fv = 0.0, Gu = 0.0, Gv = 0.0;

  double det() const { return E * G - F * F; }
};

/// Second fundamental form with respect to U = eta_u x eta_v / |eta_u x eta_v|.
/// N2 is the vv coefficient (named to keep it apart from the Frenet normal).
struct SecondForm {
  double L = 0.0, M = 0.0, N2 = 0.0;

  double contract(double up, double vp) const { return L * up * up + 2.0 * M * up * vp + N2 * vp * vp; }
};

/// E, F, G as order-1 jets in (u, v).
struct MetricJets {
  Jet2 E, F, G;
};

MetricJets metric_jets(const SurfaceJet& s);
/// Components of the unit normal as order-1 jets in (u, v).
std::array<Jet2, 3> normal_jets(const SurfaceJet& s);

FirstForm first_form(const SurfaceJet& s);
FirstForm first_form(const SurfacePatch& patch, double u, double v);
Vec3 unit_normal(const SurfaceJet& s);
Vec3 unit_normal(const SurfacePatch& patch, double u, double v);
SecondForm second_form(const SurfaceJet& s);
SecondForm second_form(const SurfacePatch& patch, double u, double v);

enum class ParamMode { Reparametrize, AssertUnitSpeed };

/// Curve (u(t), v(t)) in the parameter domain of a patch.
class CurveOnSurface {
 public:
  CurveOnSurface(expr::Expr u, expr::Expr v, Interval t_range,
                 ParamMode mode = ParamMode::Reparametrize);

  /// Parse coordinate expressions over the variable {t}.
  static CurveOnSurface parse(std::string_view u, std::string_view v, Interval t_range,
                              ParamMode mode = ParamMode::Reparametrize);

  const expr::Expr& u_expr() const noexcept { return u_; }
  const expr::Expr& v_expr() const noexcept { return v_; }
  Interval t_range() const noexcept { return t_range_; }
  ParamMode mode() const noexcept { return mode_; }

  std::array<Jet1, 2> jets(double t, int order = Jet1::kMaxOrder) const;

 private:
  expr::Expr u_;
  expr::Expr v_;
  Interval t_range_;
  ParamMode mode_;
};

/// Parameter derivatives of (u, v) at one t, converted to arc length.
struct CurveDerivatives {
  double t = 0.0, u = 0.0, v = 0.0;
  double u_t = 0.0, u_tt = 0.0, v_t = 0.0, v_tt = 0.0;
  double sigma = 0.0;    // |d gamma / dt|
  double sigma_t = 0.0;  // d sigma / dt
  double up = 0.0, upp = 0.0, vp = 0.0, vpp = 0.0;  // d/ds, d^2/ds^2
};

CurveDerivatives curve_s_derivatives(const SurfaceJet& s, const std::array<Jet1, 2>& curve_jets,
                                     ParamMode mode);
CurveDerivatives curve_s_derivatives(const SurfacePatch& patch, const CurveOnSurface& curve,
                                     double t);

/// |d gamma / dt| at t (first derivatives only).
double curve_speed(const SurfacePatch& patch, const CurveOnSurface& curve, double t);

/// Frenet and Darboux frames plus curvature invariants at one curve point.
struct FrameSample {
  double t = 0.0;
  double s = 0.0;
  double u = 0.0;
  double v = 0.0;
  Vec3 point;
  Vec3 T, N, B, P, U;
  Vec3 T_prime;  // dT/ds
  double kappa = 0.0;
  double kappa_g = 0.0;
  double kappa_n = 0.0;
  double tau_g = 0.0;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  bool frenet_defined = false;  // false when kappa < kCurvatureTolerance

  CurveDerivatives derivs;
  Vec3 eta_u, eta_v;
  FirstForm first;
  SecondForm second;

  // Agreement of the two independent routes for B and for kappa_n.
  double binormal_route_gap = 0.0;
  double normal_curvature_route_gap = 0.0;
};

FrameSample frame_sample(const SurfacePatch& patch, const CurveOnSurface& curve, double t,
                         double s = std::numeric_limits<double>::quiet_NaN());

/// n samples equally spaced in arc length (reparametrize mode) or in t
/// (assert-unit-speed mode, where s = t - t0).
std::vector<FrameSample> sample_curve(const SurfacePatch& patch, const CurveOnSurface& curve,
                                      std::size_t n);

}  // namespace darboux
