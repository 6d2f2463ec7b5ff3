#pragma once

#include <vector>

#include "toricmin/linalg.hpp"

namespace toricmin {

// x -> <coef, x> + constant
struct AffineForm {
  Point coef;
  Scalar constant;

  Scalar operator()(const Point &x) const { return dot(coef, x) + constant; }
  bool is_exact() const;
  bool is_constant() const;
};

// bound(x) >= || (components_i(x))_i ||, a second-order cone constraint.
struct ConeConstraint {
  AffineForm bound;
  std::vector<AffineForm> components;

  // bound(x) - ||components(x)||; negative means violated.
  Scalar slack(const Point &x) const;
  bool is_exact() const;
};

// A closed convex set base + cone(recession), with base cut out by affine
// inequalities f(x) >= 0 and second-order cone constraints. The recession
// generators, when present, must be linearly independent and span the space.
class ConvexRegion {
 public:
  ConvexRegion() = default;
  explicit ConvexRegion(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<AffineForm> &inequalities() const { return ineqs_; }
  const std::vector<ConeConstraint> &cone_constraints() const { return cones_; }
  const std::vector<Point> &recession() const { return recession_; }
  bool has_recession() const { return !recession_.empty(); }
  bool is_polyhedral() const { return cones_.empty(); }
  bool is_exact() const;

  ConvexRegion &add_inequality(AffineForm f);
  ConvexRegion &add_equality(const AffineForm &f);
  ConvexRegion &add_cone_constraint(ConeConstraint c);
  ConvexRegion with_recession(std::vector<Point> generators) const;
  ConvexRegion base() const;

  // Membership of the base only, with tolerance for approximate data.
  bool base_contains(const Point &x) const;

  // { y : T y + shift in this }.
  ConvexRegion preimage(const Matrix &t, const Point &shift) const;
  // this + shift.
  ConvexRegion translated(const Point &shift) const;
  // t * this, for t > 0.
  ConvexRegion scaled(const Scalar &t) const;
  ConvexRegion intersect(const ConvexRegion &other) const;

  // Second-order cone constraints whose components span a single direction
  // are replaced by the equivalent pair of affine inequalities.
  ConvexRegion linearized() const;

 private:
  std::size_t dim_ = 0;
  std::vector<AffineForm> ineqs_;
  std::vector<ConeConstraint> cones_;
  std::vector<Point> recession_;
};

// Coordinate half-spaces x_i >= 0 for every i.
ConvexRegion nonnegative_orthant(std::size_t dim);

std::vector<Point> standard_basis(std::size_t dim);

}  // namespace toricmin
