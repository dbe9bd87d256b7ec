#include "darboux/rectify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace darboux {

PositionDecomposition decompose_position(std::span<const FrameSample> samples) {
  PositionDecomposition d;
  d.samples.reserve(samples.size());
  double sum_nu = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const FrameSample& f = samples[i];
    const PositionComponents c{dot(f.point, f.T), dot(f.point, f.P), dot(f.point, f.U)};
    const double len = norm(f.point);
    const double err = norm(f.T * c.lambda + f.P * c.mu + f.U * c.nu - f.point) / (1.0 + len);
    if (err > 1e-10)
      throw std::logic_error("Darboux frame reconstruction failed at sample " + std::to_string(i));
    d.max_reconstruction_error = std::max(d.max_reconstruction_error, err);
    d.max_position_norm = std::max(d.max_position_norm, len);
    const double a = std::abs(c.nu);
    sum_nu += a;
    if (i == 0 || a > d.max_abs_nu) {
      d.max_abs_nu = a;
      d.max_nu_index = i;
    }
    d.samples.push_back(c);
  }
  if (!samples.empty()) d.mean_abs_nu = sum_nu / static_cast<double>(samples.size());
  return d;
}

double default_rectifying_tolerance(const PositionDecomposition& d) {
  return 1e-8 * (1.0 + d.max_position_norm);
}

RectifyingVerdict classify_darboux_rectifying(const PositionDecomposition& d,
                                              std::optional<double> tolerance) {
  if (d.samples.size() < 2) throw ConfigError("rectifying classification needs at least two samples");
  RectifyingVerdict v;
  v.tolerance = tolerance.value_or(default_rectifying_tolerance(d));
  v.witness = d.max_nu_index;
  v.witness_nu = d.samples[d.max_nu_index].nu;
  v.rectifying = d.max_abs_nu <= v.tolerance;
  return v;
}

}  // namespace darboux
