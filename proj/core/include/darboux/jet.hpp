#pragma once

/**
 * @file jet.hpp
 * @brief Truncated Taylor jets for forward-mode differentiation.
 *
 * Jet1 carries a scalar function of one variable t together with its
 * derivatives d/dt .. d^3/dt^3 (up to the jet's order). Jet2 carries a
 * scalar function of (u, v) together with its partials up to second order.
 * Slots store derivatives, not Taylor coefficients divided by k!.
 *
 * Every elementary function is applied through `compose`, which takes the
 * outer function's derivatives at the inner value and applies Faa di Bruno
 * up to the jet order. Binary operations combine jets of different order at
 * the lower of the two orders.
 *
 * @code
 * auto t = darboux::Jet1::variable(2.0);
 * auto y = t * t;            // y[0] == 4, y[1] == 4, y[2] == 2
 * auto u = darboux::Jet2::variable_u(0.0);
 * auto c = darboux::cosh(u); // value 1, d_u 0, d_uu 1
 * @endcode
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <sstream>
#include <string>

#include "darboux/errors.hpp"

namespace darboux {

/// Outer-function derivatives f, f', f'', f''' at a point.
using Derivs = std::array<double, 4>;

class Jet1 {
 public:
  static constexpr int kMaxOrder = 3;

  constexpr Jet1() = default;
  /// Constant jet: every derivative slot is zero.
  constexpr explicit Jet1(double value, int order = kMaxOrder)
      : d_{value, 0.0, 0.0, 0.0}, order_(clamp_order(order)) {}

  static constexpr Jet1 from_derivatives(const Derivs& d, int order = kMaxOrder) {
    Jet1 j(d[0], order);
    for (int k = 1; k <= j.order_; ++k) j.d_[k] = d[k];
    return j;
  }

  /// Seeded independent variable: value t, first derivative 1.
  static constexpr Jet1 variable(double t, int order = kMaxOrder) {
    Jet1 j(t, order);
    j.d_[1] = 1.0;
    return j;
  }

  constexpr int order() const noexcept { return order_; }
  constexpr double value() const noexcept { return d_[0]; }
  /// k-th derivative; zero beyond the order.
  constexpr double operator[](int k) const noexcept {
    return k <= order_ ? d_[k] : 0.0;
  }

  constexpr bool is_constant() const noexcept {
    for (int k = 1; k <= order_; ++k)
      if (d_[k] != 0.0) return false;
    return true;
  }

  /// Jet of the derivative, one order lower.
  constexpr Jet1 derivative() const {
    Jet1 j(d_[1], order_ - 1);
    for (int k = 1; k <= j.order_; ++k) j.d_[k] = d_[k + 1];
    return j;
  }

  /// Jet of f(this) given f and its derivatives at value().
  constexpr Jet1 compose(const Derivs& f) const {
    Jet1 r(f[0], order_);
    const double a1 = d_[1], a2 = d_[2], a3 = d_[3];
    if (order_ >= 1) r.d_[1] = f[1] * a1;
    if (order_ >= 2) r.d_[2] = f[2] * a1 * a1 + f[1] * a2;
    if (order_ >= 3) r.d_[3] = f[3] * a1 * a1 * a1 + 3.0 * f[2] * a1 * a2 + f[1] * a3;
    return r;
  }

  constexpr Jet1 operator-() const {
    Jet1 r = *this;
    for (auto& c : r.d_) c = -c;
    return r;
  }
  friend constexpr Jet1 operator+(const Jet1& a, const Jet1& b) {
    Jet1 r(0.0, std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k) r.d_[k] = a.d_[k] + b.d_[k];
    return r;
  }
  friend constexpr Jet1 operator-(const Jet1& a, const Jet1& b) { return a + (-b); }
  friend constexpr Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r(a.d_[0] * b.d_[0], std::min(a.order_, b.order_));
    if (r.order_ >= 1) r.d_[1] = a.d_[1] * b.d_[0] + a.d_[0] * b.d_[1];
    if (r.order_ >= 2)
      r.d_[2] = a.d_[2] * b.d_[0] + 2.0 * a.d_[1] * b.d_[1] + a.d_[0] * b.d_[2];
    if (r.order_ >= 3)
      r.d_[3] = a.d_[3] * b.d_[0] + 3.0 * a.d_[2] * b.d_[1] +
                3.0 * a.d_[1] * b.d_[2] + a.d_[0] * b.d_[3];
    return r;
  }
  friend Jet1 operator/(const Jet1& a, const Jet1& b);

  Jet1& operator+=(const Jet1& b) { return *this = *this + b; }
  Jet1& operator-=(const Jet1& b) { return *this = *this - b; }
  Jet1& operator*=(const Jet1& b) { return *this = *this * b; }

 private:
  static constexpr int clamp_order(int order) { return std::clamp(order, 0, kMaxOrder); }

  std::array<double, 4> d_{};
  int order_ = kMaxOrder;
};

/// Scalar function of (u, v) with partials through second order.
class Jet2 {
 public:
  static constexpr int kMaxOrder = 2;

  constexpr Jet2() = default;
  constexpr explicit Jet2(double value, int order = kMaxOrder)
      : value_(value), order_(std::clamp(order, 0, kMaxOrder)) {}

  static constexpr Jet2 from_partials(double value, double du, double dv, double duu,
                                      double duv, double dvv, int order = kMaxOrder) {
    Jet2 j(value, order);
    if (j.order_ >= 1) {
      j.du_ = du;
      j.dv_ = dv;
    }
    if (j.order_ >= 2) {
      j.duu_ = duu;
      j.duv_ = duv;
      j.dvv_ = dvv;
    }
    return j;
  }
  static constexpr Jet2 variable_u(double u, int order = kMaxOrder) {
    return from_partials(u, 1.0, 0.0, 0.0, 0.0, 0.0, order);
  }
  static constexpr Jet2 variable_v(double v, int order = kMaxOrder) {
    return from_partials(v, 0.0, 1.0, 0.0, 0.0, 0.0, order);
  }

  constexpr int order() const noexcept { return order_; }
  constexpr double value() const noexcept { return value_; }
  constexpr double du() const noexcept { return du_; }
  constexpr double dv() const noexcept { return dv_; }
  constexpr double duu() const noexcept { return duu_; }
  constexpr double duv() const noexcept { return duv_; }
  constexpr double dvv() const noexcept { return dvv_; }

  constexpr bool is_constant() const noexcept {
    return du_ == 0.0 && dv_ == 0.0 && duu_ == 0.0 && duv_ == 0.0 && dvv_ == 0.0;
  }

  /// Jet of the u-partial, one order lower.
  constexpr Jet2 partial_u() const {
    return from_partials(du_, duu_, duv_, 0.0, 0.0, 0.0, order_ - 1);
  }
  constexpr Jet2 partial_v() const {
    return from_partials(dv_, duv_, dvv_, 0.0, 0.0, 0.0, order_ - 1);
  }

  constexpr Jet2 compose(const Derivs& f) const {
    Jet2 r(f[0], order_);
    if (order_ >= 1) {
      r.du_ = f[1] * du_;
      r.dv_ = f[1] * dv_;
    }
    if (order_ >= 2) {
      r.duu_ = f[2] * du_ * du_ + f[1] * duu_;
      r.duv_ = f[2] * du_ * dv_ + f[1] * duv_;
      r.dvv_ = f[2] * dv_ * dv_ + f[1] * dvv_;
    }
    return r;
  }

  constexpr Jet2 operator-() const {
    return from_partials(-value_, -du_, -dv_, -duu_, -duv_, -dvv_, order_);
  }
  friend constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
    return from_partials(a.value_ + b.value_, a.du_ + b.du_, a.dv_ + b.dv_,
                         a.duu_ + b.duu_, a.duv_ + b.duv_, a.dvv_ + b.dvv_,
                         std::min(a.order_, b.order_));
  }
  friend constexpr Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }
  friend constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
    return from_partials(
        a.value_ * b.value_, a.du_ * b.value_ + a.value_ * b.du_,
        a.dv_ * b.value_ + a.value_ * b.dv_,
        a.duu_ * b.value_ + 2.0 * a.du_ * b.du_ + a.value_ * b.duu_,
        a.duv_ * b.value_ + a.du_ * b.dv_ + a.dv_ * b.du_ + a.value_ * b.duv_,
        a.dvv_ * b.value_ + 2.0 * a.dv_ * b.dv_ + a.value_ * b.dvv_,
        std::min(a.order_, b.order_));
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b);

  Jet2& operator+=(const Jet2& b) { return *this = *this + b; }
  Jet2& operator-=(const Jet2& b) { return *this = *this - b; }
  Jet2& operator*=(const Jet2& b) { return *this = *this * b; }

 private:
  double value_ = 0.0;
  double du_ = 0.0, dv_ = 0.0;
  double duu_ = 0.0, duv_ = 0.0, dvv_ = 0.0;
  int order_ = kMaxOrder;
};

template <typename J>
concept JetLike = requires(const J& a, const Derivs& f) {
  { a.value() } -> std::convertible_to<double>;
  { a.order() } -> std::convertible_to<int>;
  { a.compose(f) } -> std::same_as<J>;
  { a * a } -> std::same_as<J>;
  { a + a } -> std::same_as<J>;
  { a.is_constant() } -> std::convertible_to<bool>;
};

namespace detail {

inline std::string format_value(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

[[noreturn]] inline void domain_error(const char* fn, double x, const char* why) {
  throw JetDomainError(std::string(fn) + ": argument " + format_value(x) + " " + why);
}

inline Derivs reciprocal_derivs(double x) {
  if (x == 0.0) domain_error("division", x, "is a zero divisor");
  const double r = 1.0 / x;
  return {r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r};
}

// x^p with constant p; coefficients p(p-1).. that vanish zero the slot so
// integer powers at x = 0 stay finite.
inline Derivs power_derivs(double x, double p) {
  Derivs f{};
  double coeff = 1.0;
  for (int k = 0; k < 4; ++k) {
    if (coeff == 0.0) {
      f[k] = 0.0;
    } else {
      const double e = p - k;
      if (x == 0.0 && e < 0.0) domain_error("pow", x, "raised to a negative power");
      f[k] = coeff * std::pow(x, e);
    }
    coeff *= (p - k);
  }
  return f;
}

}  // namespace detail

inline Jet1 operator/(const Jet1& a, const Jet1& b) {
  return a * b.compose(detail::reciprocal_derivs(b.value()));
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  return a * b.compose(detail::reciprocal_derivs(b.value()));
}

template <JetLike J> J operator+(const J& a, double b) { return a + J(b, a.order()); }
template <JetLike J> J operator+(double a, const J& b) { return J(a, b.order()) + b; }
template <JetLike J> J operator-(const J& a, double b) { return a - J(b, a.order()); }
template <JetLike J> J operator-(double a, const J& b) { return J(a, b.order()) - b; }
template <JetLike J> J operator*(const J& a, double b) { return a * J(b, a.order()); }
template <JetLike J> J operator*(double a, const J& b) { return J(a, b.order()) * b; }
template <JetLike J> J operator/(const J& a, double b) { return a / J(b, a.order()); }
template <JetLike J> J operator/(double a, const J& b) { return J(a, b.order()) / b; }

template <JetLike J>
J sin(const J& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose({s, c, -s, -c});
}

template <JetLike J>
J cos(const J& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose({c, -s, -c, s});
}

template <JetLike J>
J tan(const J& a) {
  const double c = std::cos(a.value());
  if (c == 0.0) detail::domain_error("tan", a.value(), "is a pole");
  const double t = std::tan(a.value());
  const double sec2 = 1.0 + t * t;
  return a.compose({t, sec2, 2.0 * t * sec2, 2.0 * sec2 * (1.0 + 3.0 * t * t)});
}

template <JetLike J>
J sinh(const J& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.compose({s, c, s, c});
}

template <JetLike J>
J cosh(const J& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.compose({c, s, c, s});
}

template <JetLike J>
J tanh(const J& a) {
  const double t = std::tanh(a.value());
  const double sech2 = 1.0 - t * t;
  return a.compose({t, sech2, -2.0 * t * sech2, sech2 * (6.0 * t * t - 2.0)});
}

template <JetLike J>
J exp(const J& a) {
  const double e = std::exp(a.value());
  return a.compose({e, e, e, e});
}

template <JetLike J>
J log(const J& a) {
  const double x = a.value();
  if (!(x > 0.0)) detail::domain_error("log", x, "is not positive");
  const double r = 1.0 / x;
  return a.compose({std::log(x), r, -r * r, 2.0 * r * r * r});
}

template <JetLike J>
J sqrt(const J& a) {
  const double x = a.value();
  if (!(x > 0.0)) detail::domain_error("sqrt", x, "is not positive");
  const double r = std::sqrt(x);
  return a.compose({r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x)});
}

template <JetLike J>
J atan(const J& a) {
  const double x = a.value();
  const double q = 1.0 / (1.0 + x * x);
  return a.compose({std::atan(x), q, -2.0 * x * q * q, (6.0 * x * x - 2.0) * q * q * q});
}

/// atan2(y, x): derivatives taken from atan(y/x) or -atan(x/y), whichever
/// quotient is bounded; the value comes from std::atan2.
template <JetLike J>
J atan2(const J& y, const J& x) {
  const double yv = y.value(), xv = x.value();
  if (xv == 0.0 && yv == 0.0) detail::domain_error("atan2", 0.0, "has both arguments zero");
  J branch = std::abs(xv) >= std::abs(yv) ? atan(y / x) : -atan(x / y);
  return (branch - branch.value()) + std::atan2(yv, xv);
}

template <JetLike J>
J pow(const J& base, const J& exponent) {
  const double x = base.value();
  if (exponent.is_constant()) {
    const double p = exponent.value();
    const bool integral = std::isfinite(p) && std::floor(p) == p;
    if (!integral && !(x > 0.0))
      detail::domain_error("pow", x, "is a non-positive base with a fractional exponent");
    J r = base.compose(detail::power_derivs(x, p));
    return r;
  }
  if (!(x > 0.0)) detail::domain_error("pow", x, "is a non-positive base with a variable exponent");
  return exp(exponent * log(base));
}

template <JetLike J>
J pow(const J& base, double p) {
  return pow(base, J(p, base.order()));
}

}  // namespace darboux
