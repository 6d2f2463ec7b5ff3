#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricmin/cone.hpp"
#include "toricmin/errors.hpp"
#include "toricmin/region.hpp"
#include "toricmin/torus_ns.hpp"

namespace toricmin {

class PlanarSolver;

struct Fan {
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;  // ray indices, in generator order

  std::size_t dim() const { return rays.empty() ? 0 : rays[0].size(); }
  Cone cone(std::size_t id) const;

  friend bool operator==(const Fan &a, const Fan &b) {
    return a.rays == b.rays && a.max_cones == b.max_cones;
  }
};

// A point of X in the canonical coordinates (x, z) of the chart of a maximal
// cone. Zero x-coordinates mark the orbit the point lies on.
struct ChartPoint {
  std::size_t sigma = 0;
  std::vector<Complex> x;
  std::vector<Complex> z;

  std::vector<std::size_t> zero_set() const;  // I = { j : x_j = 0 }
};

struct BundleProblem {
  TorusBase base;
  Fan fan;
  std::vector<NSClass> L_hom;  // class of L(e^k), one per basis vector of M
  NSClass L0;
  std::vector<Scalar> h;       // support function value per ray
  bool assume_projective = false;  // waiver for fans of rank > 2
  std::map<std::string, ChartPoint> points;  // optional named points

  std::size_t n() const { return fan.dim(); }
  friend bool operator==(const BundleProblem &a, const BundleProblem &b);
};

struct ValidationIssue {
  ErrorCode code;
  std::string message;
  bool warning = false;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const;
};

ValidationReport validate(const BundleProblem &problem);

// A validated problem together with the data derived from it once: Cartier
// data, dual bases of the charts, box_h and box_nef.
class ToricBundle {
 public:
  explicit ToricBundle(BundleProblem problem);
  ~ToricBundle();
  ToricBundle(const ToricBundle &) = delete;
  ToricBundle &operator=(const ToricBundle &) = delete;

  const BundleProblem &problem() const { return problem_; }
  const TorusBase &base() const { return problem_.base; }
  std::size_t n() const { return problem_.n(); }
  std::size_t cone_count() const { return problem_.fan.max_cones.size(); }

  Cone cone(std::size_t id) const;
  // Ray generators v_j of the chart, and the dual basis v^j.
  const std::vector<IntVector> &generators(std::size_t id) const { return gens_.at(check(id)); }
  const std::vector<IntVector> &duals(std::size_t id) const { return duals_.at(check(id)); }
  // m_sigma with <m_sigma, v> = h(v) on the generators of sigma.
  const IntVector &cartier(std::size_t id) const { return cartier_.at(check(id)); }

  // L0 + sum_k m_k L(e^k).
  NSClass class_at(const Point &m) const;
  HermitianMatrix form_at(const Point &m) const;

  const ConvexRegion &box_h() const { return box_h_; }
  const ConvexRegion &box_nef() const;
  // Prepared solver for box_nef (n = 2 only).
  const PlanarSolver &box_nef_solver() const;

  // The map m -> (<m - m_sigma, v_j>)_j sends regions of M_R to exponent
  // coordinates of the chart, where sigma^vee becomes the orthant.
  ConvexRegion to_exponent(const ConvexRegion &region_in_m, std::size_t id) const;
  Point exponent_of(const Point &m, std::size_t id) const;
  Point from_exponent(const Point &y, std::size_t id) const;

  // Resolve a named point ("P(L0)" etc.) or throw UnknownPoint.
  ChartPoint named_point(const std::string &name) const;
  void check_point(const ChartPoint &p) const;

 private:
  std::size_t check(std::size_t id) const;

  BundleProblem problem_;
  std::vector<std::vector<IntVector>> gens_, duals_;
  std::vector<IntVector> cartier_;
  ConvexRegion box_h_;
  mutable std::optional<ConvexRegion> box_nef_;
  mutable std::unique_ptr<PlanarSolver> box_nef_solver_;
};

std::map<std::size_t, IntVector> cartier_data(const Fan &fan, const std::vector<Scalar> &h);
ConvexRegion box_h(const Fan &fan, const std::vector<Scalar> &h);
ConvexRegion box_nef(const ToricBundle &bundle);

bool is_pseudoeffective(const ToricBundle &bundle);

enum class Bigness { Big, NotBig, Unknown };
const char *bigness_name(Bigness b);
Bigness is_big(const ToricBundle &bundle);

// (<m - m_sigma, v_j>)_j, the exponent of chi^m in the chart of sigma.
IntVector section_exponents(const ToricBundle &bundle, std::size_t sigma, const IntVector &m);

// Torus coordinates y in (C^*)^n of a chart point with no zero x-coordinate,
// as log-moduli log|y_k|.
std::vector<double> log_torus_coordinates(const ToricBundle &bundle, const ChartPoint &p);

// Re-express a point with all x_j != 0 in the chart of another cone.
ChartPoint change_chart(const ToricBundle &bundle, const ChartPoint &p, std::size_t target);

// A maximal cone containing w0 = -sum log|y_k| u_k; smallest id on ties.
std::size_t locate_cone(const ToricBundle &bundle, const ChartPoint &p);

// Refinement of a complete planar fan by the hyperplanes u^perp, smoothed by
// Hirzebruch-Jung ray insertion.
Fan subdivide(const Fan &fan, const std::vector<IntVector> &hyperplane_normals);

// P_jk = <v^j, v~_k> for sigma_tilde contained in sigma.
IntMatrix pullback_matrix(const Cone &sigma, const Cone &sigma_tilde);

}  // namespace toricmin
