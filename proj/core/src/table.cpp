#include "darboux/table.hpp"

#include <charconv>
#include <cmath>

namespace darboux {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void write_sample_table(std::ostream& out, std::span<const FrameSample> samples,
                        const PositionDecomposition& decomposition) {
  if (decomposition.samples.size() != samples.size())
    throw ConfigError("decomposition does not match the curve samples");
  out << kSampleTableHeader << '\n';
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const FrameSample& f = samples[i];
    const PositionComponents& c = decomposition.samples[i];
    const double row[] = {f.t,       f.s,     f.u,       f.v,     f.point.x, f.point.y, f.point.z, f.kappa,
                          f.kappa_g, f.kappa_n, f.tau_g, f.alpha, c.lambda,  c.mu,      c.nu};
    for (std::size_t k = 0; k < std::size(row); ++k) out << (k ? "," : "") << format_number(row[k]);
    out << '\n';
  }
}

}  // namespace darboux
