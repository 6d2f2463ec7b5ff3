#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricmin/region.hpp"

namespace toricmin {

using Polygon = std::vector<std::pair<double, double>>;

// Boundary polygon of a bounded planar region (arcs sampled).
Polygon region_polygon(const ConvexRegion &region, int per_arc = 64);

// Boundary of base + orthant clipped to [0, xmax] x [0, ymax]: the
// south-west chain of the base closed up along the window.
Polygon orthant_hull_polygon(const ConvexRegion &base, double xmax, double ymax, int per_arc = 64);

struct SvgPlot {
  Polygon region;
  std::vector<std::pair<long, long>> lattice;  // marked lattice points
  double xmin = 0, ymin = 0, xmax = 1, ymax = 1;
  std::string title;
};

// The region is a single <path id="region"> in data coordinates; a group
// transform maps data to pixels.
std::string render_svg(const SvgPlot &plot);

// Vertices of the path with id="region" in an SVG produced by render_svg.
Polygon parse_region_path(const std::string &svg);

// Inside or within `tol` of the boundary.
bool polygon_contains(const Polygon &poly, double x, double y, double tol = 1e-9);

}  // namespace toricmin
