#pragma once

// Residual checkers for the invariance identities of Darboux rectifying
// curves under isometries and conformal maps.
//
// Every checker evaluates identities on the Darboux-rectifying part of the
// position vector, gamma_tan = lambda T + mu P, which equals gamma on a
// rectifying curve. Residuals are normalised as |lhs - rhs| / (1 + |lhs| + |rhs|)
// unless a track says otherwise.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/geom.hpp"
#include "darboux/rectify.hpp"
#include "darboux/surfmap.hpp"

namespace darboux {

inline constexpr double kCheckTolerance = 1e-7;
inline constexpr double kMaxSkippedFraction = 0.2;
inline constexpr double kEqualityGate = 1e-10;  // "kappa equals kappa-bar" pointwise

/// One residual series within a report.
struct Track {
  std::string name;
  std::vector<double> residuals;  // one per evaluated sample
  double max = 0.0;
  double mean = 0.0;
  double tolerance = 0.0;
  bool informational = false;  // reported, never affects the verdict
  bool pass = true;
};

struct TheoremReport {
  std::string id;
  std::vector<double> residuals;  // primary track
  double max = 0.0;
  double mean = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::size_t skipped = 0;  // curvature-degenerate samples
  bool pass = false;
  std::vector<Track> tracks;  // tracks[0] is the primary track
  std::vector<std::string> notes;

  const Track* track(std::string_view name) const;
};

struct CheckOptions {
  double tolerance = kCheckTolerance;
  std::uint64_t seed = 0;
  std::size_t draws = 64;  // random tangent directions per sample
};

/// Source samples, their decomposition, and the barred data along one curve.
struct MappedCurve {
  const SurfaceCorrespondence* map = nullptr;
  std::vector<FrameSample> source;
  PositionDecomposition decomposition;
  RectifyingVerdict rectifying;
  std::vector<PushedSample> target;
  MapClassification classification;
};

MappedCurve map_curve(const SurfaceCorrespondence& corr, const CurveOnSurface& curve,
                      std::size_t samples, const SampleGrid& grid = {});

/// Metric form of kappa (gamma . N) / mu: the bracket over sqrt(EG - F^2)
/// built from E, F, G, their partials and the arc-length derivatives.
double compute_A(const FirstForm& g, const CurveDerivatives& d);

/// Correction term between rho^2 gamma.N and the barred normal component
/// that comes from the derivatives of the dilation factor.
double compute_psi(const FirstForm& g, const Jet2& rho, const CurveDerivatives& d, double kappa,
                   double mu);

TheoremReport check_T31(const MappedCurve& mc, const CheckOptions& opts = {});
TheoremReport check_T32(const MappedCurve& mc, const CheckOptions& opts = {});
TheoremReport check_T33(const MappedCurve& mc, const CheckOptions& opts = {});
TheoremReport check_T34(const MappedCurve& mc, const CheckOptions& opts = {});
TheoremReport check_T41(const MappedCurve& mc, const CheckOptions& opts = {});
TheoremReport check_T42(const MappedCurve& mc, const CheckOptions& opts = {});
TheoremReport check_T43(const MappedCurve& mc, const CheckOptions& opts = {});
TheoremReport check_T44(const MappedCurve& mc, const CheckOptions& opts = {});

/// Frame orthonormality, curvature Pythagoras, rotation angle and route
/// agreement at every sample.
TheoremReport check_frames(std::span<const FrameSample> samples);

/// eta_uu . eta_u = E_u / 2 and the five companion identities, on a grid
/// over the patch and at any given curve samples.
TheoremReport check_metric_identities(const SurfacePatch& patch, const SampleGrid& grid = {},
                                      std::span<const FrameSample> samples = {});

/// Scale c of a scaled Monge patch (c u, c v, h(u, v)) at (u, v), or nullopt.
std::optional<double> monge_scale(const SurfaceJet& s);

}  // namespace darboux
