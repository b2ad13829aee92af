#pragma once

#include <string>

#include "fibmm/planar.hpp"
#include "fibmm/pwl.hpp"

namespace fibmm {

/// 800x800 plot of a full-domain envelope over [0, 1/2]^2, with the
/// horizontal reference line at (phi-1)/(phi+2) and the global maxima
/// marked. Output is deterministic for fixed input.
std::string envelope_svg(const Pwl& envelope);

/// 800x800 plot of the unit square with the zero lines of every form
/// and the maximizers marked.
std::string planar_svg(const FibCache& cache, int N, const PlanarResult& result);

}  // namespace fibmm
