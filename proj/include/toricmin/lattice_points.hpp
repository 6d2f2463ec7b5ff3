#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toricmin/region.hpp"

namespace toricmin {

using IntBox = std::pair<IntVector, IntVector>;  // inclusive lower and upper corners

// Lattice points of the region (or of its interior), intersected with `box`
// when given. Unbounded regions require a box. Sorted lexicographically.
std::vector<IntVector> lattice_points(const ConvexRegion &region, bool interior_only,
                                      const std::optional<IntBox> &box = std::nullopt);

// Smallest integer box containing a bounded region.
IntBox bounding_box(const ConvexRegion &region);

}  // namespace toricmin
