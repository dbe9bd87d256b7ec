#pragma once

// Independent reference computations used by the tests: central finite
// differences, composite Gauss-Legendre quadrature, and ambient Frenet frames
// obtained by differencing plain point evaluations. None of these touch jets.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "darboux/vec3.hpp"

namespace oracle {

using darboux::Vec3;

template <class F>
double d1(F f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double d2(F f, double x, double h = 1e-4) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

/// Third derivative: five-point stencil with two Richardson steps (error of
/// order h^6), so a coarse step keeps rounding noise small.
template <class F>
double d3(F f, double x, double h = 2e-2) {
  const auto stencil = [&](double k) {
    return (f(x + 2 * k) - 2.0 * f(x + k) + 2.0 * f(x - k) - f(x - 2 * k)) / (2.0 * k * k * k);
  };
  const double a = stencil(h), b = stencil(0.5 * h), c = stencil(0.25 * h);
  const double ab = (4.0 * b - a) / 3.0, bc = (4.0 * c - b) / 3.0;
  return (16.0 * bc - ab) / 15.0;
}

struct Partials {
  double value, du, dv, duu, duv, dvv;
};

template <class F>
Partials partials(F f, double u, double v, double h = 1e-5, double H = 1e-4) {
  Partials p;
  p.value = f(u, v);
  p.du = (f(u + h, v) - f(u - h, v)) / (2 * h);
  p.dv = (f(u, v + h) - f(u, v - h)) / (2 * h);
  p.duu = (f(u + H, v) - 2 * p.value + f(u - H, v)) / (H * H);
  p.dvv = (f(u, v + H) - 2 * p.value + f(u, v - H)) / (H * H);
  p.duv = (f(u + H, v + H) - f(u + H, v - H) - f(u - H, v + H) + f(u - H, v - H)) / (4 * H * H);
  return p;
}

/// Same quantities from stencils of step H and H/2 combined by one Richardson
/// step, which cancels the H^2 error term. Used where the plain stencils'
/// rounding noise would swamp the tolerance (large function values).
template <class F>
Partials partials_fine(F f, double u, double v, double H = 2e-3) {
  const Partials a = partials(f, u, v, H, H), b = partials(f, u, v, 0.5 * H, 0.5 * H);
  const auto rich = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };
  return {b.value, rich(a.du, b.du), rich(a.dv, b.dv), rich(a.duu, b.duu), rich(a.duv, b.duv),
          rich(a.dvv, b.dvv)};
}

template <class F>
double d1_fine(F f, double x, double h = 2e-3) {
  return (4.0 * d1(f, x, 0.5 * h) - d1(f, x, h)) / 3.0;
}

template <class F>
double d2_fine(F f, double x, double h = 2e-3) {
  return (4.0 * d2(f, x, 0.5 * h) - d2(f, x, h)) / 3.0;
}

/// |a - b| / max(1, |b|)
inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// Looser of relative `r` and absolute `a` agreement.
inline bool close(double got, double want, double r, double a) {
  return std::abs(got - want) <= std::max(a, r * std::abs(want));
}

/// Rounding noise of a central difference for a k-th derivative at step h on
/// a function of magnitude `scale`: a few ulps of the samples divided by h^k.
inline double fd_noise(double scale, double h, int k) {
  return 16.0 * 2.220446049250313e-16 * std::max(1.0, std::abs(scale)) / std::pow(h, k);
}

/// `close` widened by the finite-difference noise floor.
inline bool fd_close(double got, double want, double r, double a, double noise) {
  return std::abs(got - want) <= std::max({a, r * std::abs(want), noise});
}

/// Composite 5-point Gauss-Legendre rule.
template <class F>
double gauss_legendre(F f, double a, double b, int panels) {
  static constexpr std::array<double, 5> x{0.0, -0.5384693101056831, 0.5384693101056831,
                                           -0.9061798459386640, 0.9061798459386640};
  static constexpr std::array<double, 5> w{0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                           0.2369268850561891, 0.2369268850561891};
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double mid = a + (i + 0.5) * width;
    for (std::size_t k = 0; k < 5; ++k) sum += w[k] * f(mid + 0.5 * width * x[k]);
  }
  return 0.5 * width * sum;
}

struct AmbientFrame {
  Vec3 gamma_t, gamma_tt;
  Vec3 T, N, B;
  double kappa;
};

/// Frenet frame of a space curve from central differences of its points.
template <class G>
AmbientFrame ambient_frame(G gamma, double t, double h = 1e-4) {
  AmbientFrame f;
  f.gamma_t = (gamma(t + h) - gamma(t - h)) / (2.0 * h);
  f.gamma_tt = (gamma(t + h) - gamma(t) * 2.0 + gamma(t - h)) / (h * h);
  const double s = darboux::norm(f.gamma_t);
  const Vec3 c = darboux::cross(f.gamma_t, f.gamma_tt);
  f.kappa = darboux::norm(c) / (s * s * s);
  f.T = f.gamma_t / s;
  f.B = c / darboux::norm(c);
  f.N = darboux::cross(f.B, f.T);
  return f;
}

inline double dist(const Vec3& a, const Vec3& b) { return darboux::norm(a - b); }

/// Seeded generator shared by the hand-rolled property tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace oracle
