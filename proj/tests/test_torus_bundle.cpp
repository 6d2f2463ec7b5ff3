#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "toricmin/fixtures.hpp"
#include "toricmin/optimize.hpp"
#include "toricmin/toric_bundle.hpp"

using namespace toricmin;

namespace {

NSClass cls(long a, long b, long c) { return NSClass{Scalar(a), Scalar(b), Scalar(c)}; }

bool has_error(const ValidationReport &r, ErrorCode code) {
  for (const auto &i : r.issues)
    if (i.code == code) return true;
  return false;
}

}  // namespace

TEST(TorusNS, IntersectionCalibration) {
  TorusBase b = TorusBase::exe();
  // F1.F2 = F1.D = F2.D = 1, all squares 0
  EXPECT_EQ(self_intersection(b, cls(1, 0, 0)), Scalar(0));
  EXPECT_EQ(self_intersection(b, cls(0, 0, 1)), Scalar(0));
  EXPECT_EQ(self_intersection(b, cls(1, 1, 0)), Scalar(2));
  EXPECT_EQ(self_intersection(b, cls(1, 1, 1)), Scalar(6));
  EXPECT_EQ(self_intersection(b, cls(2, 3, -1)), Scalar(2));
  // h^0 of an ample class on an abelian surface is L^2 / 2
  EXPECT_EQ(section_dimension(b, cls(3, 3, 0)), Scalar(9));
}

TEST(TorusNS, NefMatchesEigenvalueOracle) {
  std::mt19937_64 rng(oracle::kSeed);
  std::uniform_int_distribution<int> d(-6, 6);
  TorusBase b = TorusBase::exe();
  for (int trial = 0; trial < 2000; ++trial) {
    NSClass c = cls(d(rng), d(rng), d(rng));
    double p = c[0].value(), q = c[1].value(), r = c[2].value();
    Eigen::Matrix2d h;
    h << p + r, -r, -r, q + r;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
    double lo = es.eigenvalues()(0);
    EXPECT_EQ(is_nef(b, c), lo >= -1e-12) << trial;
    EXPECT_EQ(is_ample(b, c), lo > 1e-12) << trial;
    if (is_ample(b, c)) EXPECT_NEAR(section_dimension(b, c).value(), h.determinant(), 1e-9);
  }
}

TEST(TorusNS, LBasisRoundTrip) {
  std::mt19937_64 rng(oracle::kSeed + 1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    NSClass c = cls(d(rng), d(rng), d(rng));
    NSClass back = from_l_basis(to_l_basis(c));
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(back[k].value(), c[k].value(), 1e-9);
  }
}

TEST(Bundle, CartierDataAndClasses) {
  ToricBundle b(nakayama(2));
  EXPECT_EQ(b.cartier(0), (IntVector{0, 0}));
  EXPECT_EQ(b.cartier(1), (IntVector{1, 0}));
  EXPECT_EQ(b.cartier(2), (IntVector{0, 1}));
  // class at the vertices of the standard simplex is L0, L1, L2
  EXPECT_EQ(b.class_at({Scalar(0), Scalar(0)}), cls(2, 0, -1));
  EXPECT_EQ(b.class_at({Scalar(1), Scalar(0)}), cls(3, 1, 0));
  EXPECT_EQ(b.class_at({Scalar(0), Scalar(1)}), cls(3, 3, -1));
  for (size_t s = 0; s < 3; ++s) {
    const auto &g = b.generators(s);
    const auto &dual = b.duals(s);
    for (size_t j = 0; j < 2; ++j)
      for (size_t k = 0; k < 2; ++k) EXPECT_EQ(int_dot(g[j], dual[k]), j == k ? 1 : 0);
  }
}

TEST(Bundle, BoxNefAgreesWithPointwiseOracle) {
  for (auto problem : {nakayama(2), nakayama(5), ex62(1, 2), ex65()}) {
    ToricBundle b(problem);
    const ConvexRegion &nef = b.box_nef();
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        double m1 = i / 40.0 + 0.0031, m2 = j / 40.0 + 0.0017;
        bool want = oracle::nef_box_contains(problem, m1, m2, 0);
        bool margin = oracle::nef_box_contains(problem, m1, m2, -1e-7) == oracle::nef_box_contains(problem, m1, m2, 1e-7);
        if (!margin) continue;
        EXPECT_EQ(contains(nef, {Scalar::approx(m1), Scalar::approx(m2)}), want) << m1 << "," << m2;
      }
  }
}

TEST(Bundle, ExponentCoordinatesRoundTrip) {
  ToricBundle b(ex62(1, 2));
  for (size_t s = 0; s < 3; ++s) {
    Point m{Scalar::ratio(1, 3), Scalar::ratio(2, 7)};
    EXPECT_EQ(b.from_exponent(b.exponent_of(m, s), s), m);
    // the chart origin of sigma has exponent 0 at m_sigma
    Point y = b.exponent_of(to_point(b.cartier(s)), s);
    EXPECT_TRUE(y[0].is_zero() && y[1].is_zero());
  }
}

TEST(Bundle, Positivity) {
  EXPECT_EQ(is_big(ToricBundle(nakayama(2))), Bigness::Big);
  EXPECT_EQ(is_big(ToricBundle(ex62(1, 2))), Bigness::Big);
  EXPECT_EQ(is_big(ToricBundle(ex65())), Bigness::Big);
  ToricBundle trivial(p2_bundle(cls(0, 0, 0), cls(0, 0, 0), cls(0, 0, 0)));
  EXPECT_TRUE(is_pseudoeffective(trivial));
  EXPECT_EQ(is_big(trivial), Bigness::NotBig);
  // all classes anti-ample: nothing is nef
  ToricBundle neg(p2_bundle(cls(-1, -1, 0), cls(-1, -1, 0), cls(-1, -1, 0)));
  EXPECT_FALSE(is_pseudoeffective(neg));
  EXPECT_EQ(is_big(neg), Bigness::NotBig);
}

TEST(Validation, FixturesAreClean) {
  for (auto p : {nakayama(2), nakayama(3, true), ex62(1, 2), ex65()}) EXPECT_TRUE(validate(p).ok());
}

TEST(Validation, ReportsEachDefect) {
  BundleProblem p = nakayama(2);
  p.fan.rays[1] = {2, 0};
  EXPECT_TRUE(has_error(validate(p), ErrorCode::NonPrimitiveRay));

  p = nakayama(2);
  p.fan.rays[0] = {-1, -2};
  EXPECT_TRUE(has_error(validate(p), ErrorCode::NonSmoothCone));

  p = nakayama(2);
  p.fan.max_cones.pop_back();
  EXPECT_TRUE(has_error(validate(p), ErrorCode::IncompleteFan));

  p = nakayama(2);
  p.h[0] = Scalar::ratio(1, 2);
  EXPECT_TRUE(has_error(validate(p), ErrorCode::NotCartier));

  p = nakayama(2);
  p.h.pop_back();
  EXPECT_TRUE(has_error(validate(p), ErrorCode::PLInconsistent));

  p = nakayama(2);
  p.L0.pop_back();
  EXPECT_TRUE(has_error(validate(p), ErrorCode::ArityMismatch));

  p = nakayama(2);
  p.points["bad"] = ChartPoint{7, {Complex(0, 0), Complex(0, 0)}, {Complex(0, 0), Complex(0, 0)}};
  EXPECT_TRUE(has_error(validate(p), ErrorCode::UnknownCone));
}

TEST(Charts, ChangeChartRoundTrip) {
  ToricBundle b(ex62(1, 2));
  std::mt19937_64 rng(oracle::kSeed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    ChartPoint p = oracle::random_torus_point(rng, 3);
    for (size_t t = 0; t < 3; ++t) {
      ChartPoint q = change_chart(b, p, t);
      EXPECT_EQ(q.sigma, t);
      ChartPoint back = change_chart(b, q, p.sigma);
      for (size_t j = 0; j < 2; ++j) EXPECT_LT(std::abs(back.x[j] - p.x[j]), 1e-9 * (1 + std::abs(p.x[j])));
      auto l1 = log_torus_coordinates(b, p), l2 = log_torus_coordinates(b, q);
      for (size_t k = 0; k < 2; ++k) EXPECT_NEAR(l1[k], l2[k], 1e-9);
    }
  }
}

TEST(Charts, LocateConeContainsW0) {
  ToricBundle b(nakayama(2));
  std::mt19937_64 rng(oracle::kSeed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    ChartPoint p = oracle::random_torus_point(rng, 3);
    auto ell = log_torus_coordinates(b, p);
    std::size_t s = locate_cone(b, p);
    Point w0{Scalar::approx(-ell[0]), Scalar::approx(-ell[1])};
    EXPECT_TRUE(b.cone(s).contains(w0));
    // in the located chart all |x_j| <= 1
    ChartPoint q = change_chart(b, p, s);
    for (auto x : q.x) EXPECT_LE(std::abs(x), 1 + 1e-9);
  }
}

TEST(Subdivision, HirzebruchJungInsertion) {
  Fan f;
  f.rays = {{1, 0}, {1, 3}, {-1, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
  Fan s = subdivide(f, {});
  auto has = [&](IntVector r) { return std::find(s.rays.begin(), s.rays.end(), r) != s.rays.end(); };
  // 3/1 = [3]: rays (1,1), (1,2) between e1 and e1 + 3 e2
  EXPECT_TRUE(has({1, 1}));
  EXPECT_TRUE(has({1, 2}));
  EXPECT_EQ(s.max_cones.size(), s.rays.size());
  for (size_t c = 0; c < s.max_cones.size(); ++c) {
    Cone cone = s.cone(c);
    EXPECT_TRUE(cone.is_smooth());
    EXPECT_EQ(int_determinant(cone.generator_matrix()), 1);
  }
}

TEST(Subdivision, RefinesByHyperplanes) {
  Fan p2 = nakayama(2).fan;
  Fan s = subdivide(p2, {{1, -1}, {2, 1}});
  // every hyperplane u^perp is a union of cones: both of its rays are present
  for (IntVector r : {IntVector{1, 1}, IntVector{-1, -1}, IntVector{-1, 2}, IntVector{1, -2}})
    EXPECT_NE(std::find(s.rays.begin(), s.rays.end(), r), s.rays.end());
  for (size_t c = 0; c < s.max_cones.size(); ++c) EXPECT_TRUE(s.cone(c).is_smooth());
}

TEST(Subdivision, PullbackMatrix) {
  Cone sigma{{{1, 0}, {0, 1}}}, tilde{{{1, 0}, {1, 1}}};
  EXPECT_EQ(pullback_matrix(sigma, tilde), (IntMatrix{{1, 1}, {0, 1}}));
  Cone outside{{{1, 0}, {-1, 1}}};
  EXPECT_THROW(pullback_matrix(sigma, outside), MathError);
}
