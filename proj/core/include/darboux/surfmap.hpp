#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "darboux/geom.hpp"
#include "darboux/rectify.hpp"

namespace darboux {

/// Two patches over a shared (u, v) chart. The map sends eta(u, v) to
/// target(u, v), so its differential sends eta_u to target eta_u and eta_v
/// to target eta_v.
class SurfaceCorrespondence {
 public:
  SurfaceCorrespondence(SurfacePatch source, SurfacePatch target,
                        std::optional<expr::Expr> rho = std::nullopt);

  const SurfacePatch& source() const noexcept { return source_; }
  const SurfacePatch& target() const noexcept { return target_; }
  const std::optional<expr::Expr>& declared_rho() const noexcept { return rho_; }

  /// Intersection of the two parameter domains.
  Interval u_domain() const noexcept { return u_domain_; }
  Interval v_domain() const noexcept { return v_domain_; }

  /// Dilation factor as an order-1 jet: the declared expression when present,
  /// otherwise sqrt(target E / source E).
  Jet2 rho_jet(double u, double v) const;

 private:
  SurfacePatch source_;
  SurfacePatch target_;
  std::optional<expr::Expr> rho_;
  Interval u_domain_;
  Interval v_domain_;
};

/// Cell-centred nu x nv grid over the shared domain.
struct SampleGrid {
  std::size_t nu = 9;
  std::size_t nv = 9;
};

std::vector<std::array<double, 2>> grid_points(const SurfaceCorrespondence& corr,
                                               const SampleGrid& grid);

enum class MapKind { Isometry, Homothety, Conformal, General };

std::string_view to_string(MapKind kind);
std::optional<MapKind> map_kind_from_string(std::string_view name);

struct MapGridSample {
  double u = 0.0;
  double v = 0.0;
  double rho2_hat = 0.0;                // target E / source E
  double conformal_residual = 0.0;      // max of |F' - r F|, |G' - r G| over scale
  double isometry_residual = 0.0;       // max coefficient difference
  std::optional<double> declared_rho2;  // rho^2 from the declared expression
};

struct MapClassification {
  MapKind kind = MapKind::General;
  double tolerance = 0.0;
  std::vector<MapGridSample> samples;
  double c_squared = 0.0;  // mean of rho2_hat
  double rho2_spread = 0.0;  // (max - min) / mean of rho2_hat
  double max_conformal_residual = 0.0;
  double max_isometry_residual = 0.0;
  double max_rho2_minus_one = 0.0;
  std::optional<double> max_declared_rho2_deviation;
};

inline constexpr double kMapTolerance = 1e-9;

/// Most specific class (isometry, homothety, conformal, general) whose
/// residuals all stay within `tolerance` on the grid.
MapClassification classify_map(const SurfaceCorrespondence& corr, const SampleGrid& grid = {},
                               double tolerance = kMapTolerance);

/// Residuals of E'_u = 2 rho rho_u E + rho^2 E_u and its five analogues.
struct PartialTransferReport {
  static constexpr std::array<std::string_view, 6> kNames{"E_u", "E_v", "F_u", "F_v", "G_u", "G_v"};
  std::array<double, 6> max_residual{};  // normalised by 1 + |lhs| + |rhs|
  double max = 0.0;
  bool declared_rho = false;
  std::size_t points = 0;
};

PartialTransferReport conformal_partial_check(const SurfaceCorrespondence& corr,
                                              const SampleGrid& grid = {});

/// Barred-side data for one curve sample.
struct PushedSample {
  FrameSample barred;        // frame of target(u(t), v(t)) under its own arc length
  Vec3 coefficient_vector;   // lambda T' + mu P' with source lambda, mu and barred frame
  Vec3 pushed;               // differential applied to lambda T + mu P via the basis map
  double rho2_hat = 0.0;     // target E / source E at the sample
};

/// Evaluate the barred curve at the source samples' parameters.
std::vector<PushedSample> pushforward_curve(const SurfaceCorrespondence& corr,
                                            const CurveOnSurface& curve,
                                            std::span<const FrameSample> source,
                                            const PositionDecomposition& decomposition);

/// Apply the differential to a tangent vector w of the source at a sample.
Vec3 push_tangent(const FrameSample& source, const FrameSample& barred, const Vec3& w);

}  // namespace darboux
