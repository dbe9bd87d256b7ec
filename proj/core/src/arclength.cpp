#include "darboux/arclength.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace darboux {
namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double m,
                    double fm, double b, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, m, fm, b, fb, whole, tolerance, max_depth);
}

ArcLength::ArcLength(Speed speed, Interval t_range, double tolerance, std::size_t panels)
    : speed_(std::move(speed)),
      t_range_(t_range),
      tolerance_(tolerance),
      panels_(std::max<std::size_t>(panels, 1)) {
  if (!(t_range.width() > 0.0)) throw ConfigError("arc length needs a nondegenerate t-range");
  const auto f = [this](double t) { return checked_speed(t); };
  const double panel_tol = tolerance_ / static_cast<double>(panels_);
  cumulative_.assign(panels_ + 1, 0.0);
  for (std::size_t i = 0; i < panels_; ++i)
    cumulative_[i + 1] = cumulative_[i] + adaptive_simpson(f, panel_node(i), panel_node(i + 1), panel_tol);
}

double ArcLength::panel_node(std::size_t i) const {
  if (i == panels_) return t_range_.max;
  return t_range_.min + t_range_.width() * static_cast<double>(i) / static_cast<double>(panels_);
}

double ArcLength::checked_speed(double t) const {
  const double sigma = speed_(t);
  if (!(sigma > kSpeedTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "arc length is not strictly increasing: speed " << sigma << " at t = " << t;
    throw CurveError(os.str());
  }
  return sigma;
}

double ArcLength::s_of_t(double t) const {
  t = std::clamp(t, t_range_.min, t_range_.max);
  const double pos = (t - t_range_.min) / t_range_.width() * static_cast<double>(panels_);
  const auto i = std::min(static_cast<std::size_t>(pos), panels_ - 1);
  const auto f = [this](double x) { return checked_speed(x); };
  return cumulative_[i] +
         adaptive_simpson(f, panel_node(i), t, tolerance_ / static_cast<double>(panels_));
}

double ArcLength::t_of_s(double s) const {
  if (s <= 0.0) return t_range_.min;
  if (s >= total()) return t_range_.max;
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  const auto i = static_cast<std::size_t>(std::distance(cumulative_.begin(), it)) - 1;
  double lo = panel_node(i), hi = panel_node(i + 1);
  const double s_lo = cumulative_[i], s_hi = cumulative_[i + 1];
  double t = lo + (hi - lo) * (s - s_lo) / (s_hi - s_lo);
  // Newton with a maintained bracket; a step leaving it falls back to bisection.
  for (int iter = 0; iter < 100; ++iter) {
    const double residual = s_of_t(t) - s;
    if (std::abs(residual) <= 0.1 * tolerance_) break;
    if (residual > 0.0)
      hi = t;
    else
      lo = t;
    double next = t - residual / checked_speed(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == t) break;
    t = next;
  }
  return t;
}

ArcLength arc_length(const SurfacePatch& patch, const CurveOnSurface& curve) {
  return ArcLength([patch, curve](double t) { return curve_speed(patch, curve, t); },
                   curve.t_range());
}

}  // namespace darboux
