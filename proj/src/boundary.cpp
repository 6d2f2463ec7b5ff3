#include "toricmin/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "toricmin/errors.hpp"

namespace toricmin {

bool PlanarBoundary::straight() const {
  if (closed_conic) return false;
  for (const auto &p : pieces)
    if (p.kind == BoundaryPiece::Kind::Arc) return false;
  return true;
}

bool PlanarBoundary::rational_polyhedral() const {
  if (!straight()) return false;
  for (const auto &c : corners)
    if (!is_exact(c)) return false;
  return true;
}

namespace {

double cross(const Point &o, const Point &a, const Point &b) {
  return (a[0].value() - o[0].value()) * (b[1].value() - o[1].value()) -
         (a[1].value() - o[1].value()) * (b[0].value() - o[0].value());
}

}  // namespace

PlanarBoundary trace_boundary(const ConvexRegion &region) {
  if (region.dim() != 2) fail(ErrorCode::UnsupportedDimension, "boundary tracing is planar only");
  if (region.has_recession()) fail(ErrorCode::UnboundedRegion, "region has a recession cone");
  PlanarSolver ps(region.base());
  if (ps.empty()) fail(ErrorCode::EmptyRegion, "region is empty");

  PlanarBoundary b;
  b.corners = ps.corners();

  // Interior point: average of corners and support points in eight directions.
  std::vector<Point> pts = b.corners;
  const int dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  for (auto &d : dirs) {
    OptResult r = ps.minimize(Point{Scalar(d[0]), Scalar(d[1])});
    if (!r.bounded()) fail(ErrorCode::UnboundedRegion, "region is unbounded");
    pts.push_back(r.witness);
  }
  double cx = 0, cy = 0;
  for (const auto &p : pts) {
    cx += p[0].value();
    cy += p[1].value();
  }
  cx /= pts.size();
  cy /= pts.size();
  b.center = Point{Scalar::approx(cx), Scalar::approx(cy)};

  std::sort(b.corners.begin(), b.corners.end(), [&](const Point &p, const Point &q) {
    return std::atan2(p[1].value() - cy, p[0].value() - cx) < std::atan2(q[1].value() - cy, q[0].value() - cx);
  });

  if (b.corners.empty()) {
    b.closed_conic = ps.curved();
    return b;
  }
  size_t n = b.corners.size();
  for (size_t i = 0; i < n; ++i) {
    const Point &p = b.corners[i];
    const Point &q = b.corners[(i + 1) % n];
    BoundaryPiece piece{BoundaryPiece::Kind::Arc, p, q};
    if (n == 1) {
      b.pieces.push_back(piece);
      break;
    }
    // Consecutive corners in counterclockwise order have the interior on
    // their left; with two corners only one of the two chords qualifies.
    bool left = cross(p, q, b.center) > 0;
    if (!ps.curved()) {
      piece.kind = BoundaryPiece::Kind::Segment;
    } else if (left) {
      for (const auto &l : ps.edge_lines()) {
        if (l(p).is_zero() && l(q).is_zero()) {
          piece.kind = BoundaryPiece::Kind::Segment;
          break;
        }
      }
    }
    b.pieces.push_back(piece);
  }
  return b;
}

std::vector<std::pair<double, double>> sample_boundary(const PlanarBoundary &b, const ConvexRegion &region,
                                                       int per_arc) {
  std::vector<std::pair<double, double>> out;
  PlanarSolver ps(region.base());
  double cx = b.center[0].value(), cy = b.center[1].value();
  auto ray_point = [&](double ang) {
    Point d{Scalar::approx(std::cos(ang)), Scalar::approx(std::sin(ang))};
    auto t = ps.conic_ray_hit(b.center, d);
    double tv = t ? t->value() : 0.0;
    return std::make_pair(cx + tv * std::cos(ang), cy + tv * std::sin(ang));
  };
  if (b.corners.empty()) {
    int k = std::max(per_arc, 8) * 4;
    for (int i = 0; i < k; ++i) out.push_back(ray_point(2 * M_PI * i / k));
    return out;
  }
  for (const auto &piece : b.pieces) {
    out.emplace_back(piece.from[0].value(), piece.from[1].value());
    if (piece.kind == BoundaryPiece::Kind::Segment) continue;
    double a0 = std::atan2(piece.from[1].value() - cy, piece.from[0].value() - cx);
    double a1 = std::atan2(piece.to[1].value() - cy, piece.to[0].value() - cx);
    while (a1 <= a0) a1 += 2 * M_PI;
    for (int k = 1; k < per_arc; ++k) out.push_back(ray_point(a0 + (a1 - a0) * k / per_arc));
  }
  return out;
}

}  // namespace toricmin
