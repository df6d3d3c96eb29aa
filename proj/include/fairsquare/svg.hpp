#pragma once

#include "fairsquare/bounds.hpp"
#include "fairsquare/instance.hpp"

#include <string>

namespace fairsq {

// SVG 1.1 rendering of a cake plus pieces or pools. The viewport is the
// bounding box of the finite geometry and measure supports plus a 10%
// margin; unbounded cakes and pieces are clipped against it and the
// clipped edges are drawn hatched.
std::string render_allocation_svg(const InstanceFile& inst, const Allocation& a);
std::string render_pools_svg(const PoolInstance& inst);

}  // namespace fairsq
