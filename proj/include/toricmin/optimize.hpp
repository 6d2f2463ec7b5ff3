#pragma once

#include <optional>
#include <vector>

#include "toricmin/region.hpp"

namespace toricmin {

struct OptResult {
  enum class Status { Optimal, Unbounded };
  Status status = Status::Optimal;
  Scalar value;
  Point witness;

  bool bounded() const { return status == Status::Optimal; }
};

// Minimum of <w, x> over a region. Throws EmptyRegion when the region is
// empty. If w pairs negatively with a recession generator, or the base is
// unbounded in a descent direction, the result is flagged Unbounded.
// Among optimal points the lexicographically smallest witness is returned.
//
// Polyhedral regions of any dimension go through the exact simplex; regions
// with a second-order cone constraint are supported in dimension 2 only.
OptResult minimize_linear(const ConvexRegion &region, const Point &w);
OptResult maximize_linear(const ConvexRegion &region, const Point &w);

bool is_empty(const ConvexRegion &region);

// A planar base region prepared for repeated optimization: every extreme
// point that does not depend on the objective (intersections of boundary
// lines, line/conic intersections, the apex of a degenerate conic) is
// computed once. Only tangency points are computed per objective.
class PlanarSolver {
 public:
  explicit PlanarSolver(const ConvexRegion &base);

  bool empty() const { return empty_; }
  OptResult minimize(const Point &w) const;

  // Feasible objective-independent extreme point candidates that are not on
  // the artificial bounding box.
  std::vector<Point> corners() const;

  // Boundary lines: the affine constraints plus, for a degenerate conic
  // (a line pair), its two lines.
  const std::vector<AffineForm> &edge_lines() const { return edges_; }
  // True when part of the boundary may be a genuinely curved conic arc.
  bool curved() const { return conic_ && !conic_->degenerate; }

  // First t > 0 with x0 + t d on the conic (x0 feasible). nullopt if none.
  std::optional<Scalar> conic_ray_hit(const Point &x0, const Point &d) const;

  bool feasible(const Point &x) const;

 private:
  struct Conic {
    ConeConstraint soc;
    Scalar q11, q12, q22, p1, p2, r;  // q(x) = x^T Q x + 2 p.x + r
    bool degenerate = false;
  };

  void add_line_conic(const AffineForm &line, std::vector<Point> &out) const;
  void intersect_param_line(const Point &x0, const Point &d, std::vector<Point> &out) const;
  Scalar conic_value(const Point &x) const;
  void tangency(const Point &w, std::vector<Point> &out) const;
  OptResult pick(const std::vector<Point> &cands, const Point &w) const;

  ConvexRegion region_;
  std::vector<AffineForm> lines_;  // constraints + bounding box
  std::vector<AffineForm> edges_;
  std::size_t box_first_ = 0;      // lines_[box_first_..] are the bounding box
  std::optional<Conic> conic_;
  std::vector<Point> static_;
  bool empty_ = false;
};

enum class Containment { Interior, Boundary, Exterior, Ambiguous };

// Classification of q relative to region (base + recession). Ambiguous means
// an approximate computation put q within tolerance of the boundary.
Containment classify_point(const ConvexRegion &region, const Point &q);

// Closed membership; Ambiguous counts as inside.
bool contains(const ConvexRegion &region, const Point &q);

// Interior membership; throws BoundaryAmbiguous when undecidable at the
// working tolerance.
bool in_interior(const ConvexRegion &region, const Point &q);

// For a region with recession cone generated by G:
// max over b in base of min_j (G^{-1}(q - b))_j, or nullopt for +infinity.
// Positive exactly on the interior.
std::optional<Scalar> interior_margin(const ConvexRegion &region, const Point &q);

// For a region whose recession cone is the nonnegative orthant and q with
// positive coordinates: min { s : s q in region } = min_b max_j b_j / q_j.
Scalar ray_entry(const ConvexRegion &region, const Point &q);

}  // namespace toricmin
