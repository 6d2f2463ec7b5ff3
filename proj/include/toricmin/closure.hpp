#pragma once

#include <vector>

#include "toricmin/cone.hpp"
#include "toricmin/region.hpp"

namespace toricmin {

// H-representation of conv(points) + cone(rays). The rays must span the
// space (so the polyhedron is full-dimensional). The result carries the rays
// as its recession cone.
ConvexRegion hull_plus_cone(const std::vector<Point> &points, const std::vector<Point> &rays);

// The smallest closed convex set containing A that is stable under adding
// the dual cone of sigma: conv(A) + sigma^vee. Points of A live in M; an
// empty A gives sigma^vee.
ConvexRegion double_overline(const std::vector<IntVector> &a, const Cone &sigma);

// Points of `points` that are not in conv(others) + cone(rays).
std::vector<Point> minimal_generators(const std::vector<Point> &points, const std::vector<Point> &rays);

}  // namespace toricmin
