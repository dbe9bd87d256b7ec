#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "darboux/geom.hpp"

namespace darboux {

/// Position vector in the Darboux frame: gamma = lambda T + mu P + nu U.
struct PositionComponents {
  double lambda = 0.0;
  double mu = 0.0;
  double nu = 0.0;
};

struct PositionDecomposition {
  std::vector<PositionComponents> samples;
  double max_abs_nu = 0.0;
  double mean_abs_nu = 0.0;
  std::size_t max_nu_index = 0;
  double max_position_norm = 0.0;
  double max_reconstruction_error = 0.0;  // relative to 1 + |gamma|
};

/// Decompose each sample's position vector against its Darboux frame.
/// Throws std::logic_error if lambda T + mu P + nu U misses gamma by more
/// than 1e-10 (1 + |gamma|).
PositionDecomposition decompose_position(std::span<const FrameSample> samples);

struct RectifyingVerdict {
  bool rectifying = false;
  double tolerance = 0.0;
  std::size_t witness = 0;  // sample with the largest |nu|
  double witness_nu = 0.0;
};

/// Default tolerance: 1e-8 (1 + max |gamma|).
double default_rectifying_tolerance(const PositionDecomposition& d);

RectifyingVerdict classify_darboux_rectifying(const PositionDecomposition& d,
                                              std::optional<double> tolerance = std::nullopt);

}  // namespace darboux
