#pragma once

#include <functional>
#include <vector>

#include "darboux/geom.hpp"

namespace darboux {

/// Adaptive Simpson quadrature with Richardson correction.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance, int max_depth = 48);

/// Cumulative arc length s(t) of a curve and its inverse t(s).
///
/// The speed is integrated panel by panel; s(t) inside a panel is a fresh
/// quadrature from the panel's left node, and t(s) is found by Newton's
/// method on s(t) - s with a bisection fallback inside the bracketing panel.
class ArcLength {
 public:
  using Speed = std::function<double(double)>;

  ArcLength(Speed speed, Interval t_range, double tolerance = 1e-10, std::size_t panels = 32);

  double total() const noexcept { return cumulative_.back(); }
  Interval t_range() const noexcept { return t_range_; }
  double s_of_t(double t) const;
  double t_of_s(double s) const;

 private:
  double checked_speed(double t) const;
  double panel_node(std::size_t i) const;

  Speed speed_;
  Interval t_range_;
  double tolerance_;
  std::size_t panels_;
  std::vector<double> cumulative_;
};

ArcLength arc_length(const SurfacePatch& patch, const CurveOnSurface& curve);

}  // namespace darboux
