#pragma once

#include <vector>

#include "toricmin/optimize.hpp"

namespace toricmin {

struct BoundaryPiece {
  enum class Kind { Segment, Arc };
  Kind kind = Kind::Segment;
  Point from, to;
};

// Counterclockwise description of the boundary of a bounded planar region:
// corners joined by straight segments or conic arcs.
struct PlanarBoundary {
  std::vector<Point> corners;
  std::vector<BoundaryPiece> pieces;
  bool closed_conic = false;  // no corners at all, the boundary is one conic
  Point center;               // a point of the (relative) interior

  bool straight() const;
  // Straight boundary with every corner exact.
  bool rational_polyhedral() const;
};

// Throws EmptyRegion / UnboundedRegion accordingly.
PlanarBoundary trace_boundary(const ConvexRegion &region);

// Closed polyline through the boundary, counterclockwise, arcs sampled with
// `per_arc` interior points each. Coordinates as doubles.
std::vector<std::pair<double, double>> sample_boundary(const PlanarBoundary &b, const ConvexRegion &region,
                                                       int per_arc = 64);

}  // namespace toricmin
