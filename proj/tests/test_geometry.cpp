#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "toricmin/closure.hpp"
#include "toricmin/lattice_points.hpp"
#include "toricmin/optimize.hpp"

using namespace toricmin;

namespace {

// Random bounded polygon: the box [-6, 6]^2 cut by a few random half-planes
// through points near the origin, so the origin neighbourhood stays feasible.
ConvexRegion random_polygon(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-4, 4), off(1, 8);
  ConvexRegion r(2);
  for (int s : {1, -1}) {
    r.add_inequality(AffineForm{{Scalar(s), Scalar(0)}, Scalar(6)});
    r.add_inequality(AffineForm{{Scalar(0), Scalar(s)}, Scalar(6)});
  }
  for (int i = 0; i < 4; ++i) {
    int a = c(rng), b = c(rng);
    if (a == 0 && b == 0) continue;
    r.add_inequality(AffineForm{{Scalar(a), Scalar(b)}, Scalar(off(rng))});
  }
  return r;
}

// Vertex enumeration: every feasible pairwise intersection of boundary lines.
std::vector<Point> brute_vertices(const ConvexRegion &r) {
  std::vector<Point> out;
  const auto &f = r.inequalities();
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j) {
      Matrix a{f[i].coef, f[j].coef};
      auto x = solve(a, Point{-f[i].constant, -f[j].constant});
      if (x && r.base_contains(*x)) out.push_back(*x);
    }
  return out;
}

Cone random_smooth_cone(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> k(-2, 2), which(0, 1);
  IntMatrix g{{1, 0}, {0, 1}};
  for (int step = 0; step < 3; ++step) {
    int i = which(rng), t = k(rng);
    for (auto &row : g) row[1 - i] += t * row[i];
  }
  // columns of g
  return Cone{{IntVector{g[0][0], g[1][0]}, IntVector{g[0][1], g[1][1]}}};
}

}  // namespace

TEST(Geometry, LinearMinimumMatchesVertexEnumeration) {
  std::mt19937_64 rng(oracle::kSeed);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    ConvexRegion r = random_polygon(rng);
    Point w{Scalar(c(rng)), Scalar(c(rng))};
    auto verts = brute_vertices(r);
    ASSERT_FALSE(verts.empty());
    Scalar best = dot(verts[0], w);
    for (const auto &v : verts) best = min(best, dot(v, w));
    OptResult res = minimize_linear(r, w);
    ASSERT_TRUE(res.bounded());
    EXPECT_TRUE(res.value.is_exact());
    EXPECT_EQ(res.value, best) << "trial " << trial;
    EXPECT_TRUE(r.base_contains(res.witness));
  }
}

TEST(Geometry, LatticePointsMatchBruteForce) {
  std::mt19937_64 rng(oracle::kSeed + 1);
  for (int trial = 0; trial < 100; ++trial) {
    ConvexRegion r = random_polygon(rng);
    std::vector<IntVector> closed, open;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        Point p{Scalar(x), Scalar(y)};
        if (!r.base_contains(p)) continue;
        closed.push_back({x, y});
        bool strict = true;
        for (const auto &f : r.inequalities())
          if (f(p).sign() <= 0) strict = false;
        if (strict) open.push_back({x, y});
      }
    auto got = lattice_points(r, false);
    auto got_int = lattice_points(r, true);
    std::sort(got.begin(), got.end());
    std::sort(got_int.begin(), got_int.end());
    EXPECT_EQ(got, closed) << "trial " << trial;
    EXPECT_EQ(got_int, open) << "trial " << trial;
  }
}

TEST(Geometry, DiskOptimumMatchesClosedForm) {
  // |(x - 1, y - 2)| <= 3
  ConvexRegion disk(2);
  disk.add_cone_constraint(ConeConstraint{AffineForm{{Scalar(0), Scalar(0)}, Scalar(3)},
                                          {AffineForm{{Scalar(1), Scalar(0)}, Scalar(-1)},
                                           AffineForm{{Scalar(0), Scalar(1)}, Scalar(-2)}}});
  PlanarSolver solver(disk);
  EXPECT_TRUE(solver.curved());
  for (double ang = 0; ang < 6.28; ang += 0.37) {
    Point w{Scalar::approx(std::cos(ang)), Scalar::approx(std::sin(ang))};
    OptResult r = solver.minimize(w);
    double expect = std::cos(ang) * 1 + std::sin(ang) * 2 - 3;
    EXPECT_NEAR(r.value.value(), expect, 1e-9);
  }
}

TEST(Geometry, ContainmentClassification) {
  ConvexRegion sq(2);
  sq.add_inequality(AffineForm{{Scalar(1), Scalar(0)}, Scalar(0)});
  sq.add_inequality(AffineForm{{Scalar(0), Scalar(1)}, Scalar(0)});
  sq.add_inequality(AffineForm{{Scalar(-1), Scalar(0)}, Scalar(2)});
  sq.add_inequality(AffineForm{{Scalar(0), Scalar(-1)}, Scalar(2)});
  EXPECT_EQ(classify_point(sq, {Scalar(1), Scalar(1)}), Containment::Interior);
  EXPECT_EQ(classify_point(sq, {Scalar(0), Scalar(1)}), Containment::Boundary);
  EXPECT_EQ(classify_point(sq, {Scalar(3), Scalar(1)}), Containment::Exterior);
  // segment [(2,1),(1,3)] plus the orthant: min_b max(b1, b2) is 5/3 at b = (5/3, 5/3)
  ConvexRegion s = hull_plus_cone({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(3)}}, standard_basis(2));
  EXPECT_EQ(ray_entry(s, {Scalar(1), Scalar(1)}), Scalar::ratio(5, 3));
  EXPECT_EQ(ray_entry(s, {Scalar(1), Scalar(3)}), Scalar(1));
}

TEST(Geometry, DoubleOverlineMatchesDefinition) {
  std::mt19937_64 rng(oracle::kSeed + 2);
  std::uniform_int_distribution<int> c(-4, 4), n(1, 4);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Cone sigma = random_smooth_cone(rng);
    std::vector<IntVector> a;
    int k = n(rng);
    for (int i = 0; i < k; ++i) a.push_back({c(rng), c(rng)});
    ConvexRegion r = double_overline(a, sigma);
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        Point m{Scalar(x), Scalar(y)};
        EXPECT_EQ(contains(r, m), oracle::overline_by_definition(a, sigma, m))
            << "trial " << trial << " at (" << x << ", " << y << ")";
        ++checked;
      }
  }
  EXPECT_EQ(checked, 100 * 169);
}

TEST(Geometry, MinimalGeneratorsDropDominatedPoints) {
  std::vector<Point> pts{{Scalar(0), Scalar(2)}, {Scalar(2), Scalar(0)}, {Scalar(3), Scalar(3)}, {Scalar(1), Scalar(1)}};
  auto rays = standard_basis(2);
  auto kept = minimal_generators(pts, rays);
  // (3,3) is in (1,1) + orthant; (1,1) is on the segment [(0,2),(2,0)]
  EXPECT_EQ(kept.size(), 2u);
}
