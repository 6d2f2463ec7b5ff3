#include "toricmin/closure.hpp"

#include <functional>

#include "toricmin/errors.hpp"
#include "toricmin/optimize.hpp"

namespace toricmin {

namespace {

// Normal to the span of n-1 vectors in R^n, by cofactor expansion.
Point normal_of(const std::vector<Point> &vs, std::size_t n) {
  Point a(n);
  for (size_t i = 0; i < n; ++i) {
    Matrix minor;
    for (const auto &v : vs) {
      Point row;
      for (size_t k = 0; k < n; ++k)
        if (k != i) row.push_back(v[k]);
      minor.push_back(row);
    }
    Scalar d = n == 1 ? Scalar(1) : determinant(minor);
    a[i] = (i % 2 == 0) ? d : -d;
  }
  return a;
}

bool is_zero_vec(const Point &a) {
  for (const auto &x : a)
    if (!x.is_zero()) return false;
  return true;
}

// Proportional with a positive factor.
bool same_direction(const AffineForm &f, const AffineForm &g) {
  Point a(f.coef), b(g.coef);
  a.push_back(f.constant);
  b.push_back(g.constant);
  size_t k = 0;
  while (k < a.size() && a[k].is_zero()) ++k;
  if (k == a.size() || b[k].is_zero()) return false;
  Scalar r = b[k] / a[k];
  if (r.sign() <= 0) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (compare(b[i], r * a[i]) != 0) return false;
  return true;
}

}  // namespace

ConvexRegion hull_plus_cone(const std::vector<Point> &points, const std::vector<Point> &rays) {
  if (points.empty()) fail(ErrorCode::EmptyRegion, "hull of no points");
  size_t n = points[0].size();
  ConvexRegion r(n);
  std::vector<AffineForm> facets;
  for (const auto &v0 : points) {
    std::vector<Point> dirs;
    for (const auto &v : points) {
      Point d = sub(v, v0);
      if (!is_zero_vec(d)) dirs.push_back(d);
    }
    for (const auto &g : rays) dirs.push_back(g);
    std::vector<size_t> pick;
    std::function<void(size_t)> rec = [&](size_t start) {
      if (pick.size() + 1 == n) {
        std::vector<Point> vs;
        for (auto i : pick) vs.push_back(dirs[i]);
        Point a = normal_of(vs, n);
        if (is_zero_vec(a)) return;
        int sgn = 0;
        bool ok = true;
        auto check = [&](const Point &d) {
          int s = dot(a, d).sign();
          if (s == 0) return;
          if (sgn == 0) sgn = s;
          else if (s != sgn) ok = false;
        };
        for (const auto &v : points) check(sub(v, v0));
        for (const auto &g : rays) {
          int s = dot(a, g).sign();
          if (s == 0) continue;
          if (sgn == 0) sgn = s;
          else if (s != sgn) ok = false;
        }
        if (!ok) return;
        if (sgn < 0) a = scale(Scalar(-1), a);
        AffineForm f{a, -dot(a, v0)};
        for (const auto &g : facets)
          if (same_direction(f, g)) return;
        facets.push_back(f);
        return;
      }
      for (size_t i = start; i < dirs.size(); ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  for (auto &f : facets) r.add_inequality(f);
  return r.with_recession(rays);
}

ConvexRegion double_overline(const std::vector<IntVector> &a, const Cone &sigma) {
  std::vector<Point> pts, rays;
  for (const auto &m : a) pts.push_back(to_point(m));
  // the closure of the empty set is taken to be sigma^vee itself
  if (pts.empty()) pts.push_back(Point(sigma.dim(), Scalar(0)));
  for (const auto &g : dual_basis(sigma)) rays.push_back(to_point(g));
  return hull_plus_cone(pts, rays);
}

std::vector<Point> minimal_generators(const std::vector<Point> &points, const std::vector<Point> &rays) {
  std::vector<Point> kept;
  for (size_t i = 0; i < points.size(); ++i) {
    std::vector<Point> others;
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      // Drop later duplicates of the same point so one copy survives.
      if (j > i) {
        bool dup = true;
        for (size_t k = 0; k < points[i].size(); ++k)
          if (compare(points[i][k], points[j][k]) != 0) dup = false;
        if (dup) continue;
      }
      others.push_back(points[j]);
    }
    if (others.empty() || !contains(hull_plus_cone(others, rays), points[i])) kept.push_back(points[i]);
  }
  return kept;
}

}  // namespace toricmin
