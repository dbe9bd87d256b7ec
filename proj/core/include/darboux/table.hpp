#pragma once

// Plot-ready sample tables: one CSV row per curve sample.

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "darboux/geom.hpp"
#include "darboux/rectify.hpp"

namespace darboux {

inline constexpr std::string_view kSampleTableHeader =
    "t,s,u,v,x,y,z,kappa,kappa_g,kappa_n,tau_g,alpha,lambda,mu,nu";

/// Shortest text that parses back to the same double; "nan" and "inf" for
/// non-finite values.
std::string format_number(double x);

void write_sample_table(std::ostream& out, std::span<const FrameSample> samples,
                        const PositionDecomposition& decomposition);

}  // namespace darboux
