#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "toricmin/envelope.hpp"
#include "toricmin/fixtures.hpp"
#include "toricmin/optimize.hpp"

using namespace toricmin;

namespace {

const Complex kZero(0, 0);

ChartPoint at(std::size_t sigma, Complex x1, Complex x2, Complex z1 = kZero, Complex z2 = kZero) {
  return ChartPoint{sigma, {x1, x2}, {z1, z2}};
}

NSClass cls(long a, long b, long c) { return NSClass{Scalar(a), Scalar(b), Scalar(c)}; }

std::vector<Point> pentagon() {
  return {{Scalar(1), Scalar(0)},
          {Scalar(0), Scalar(1)},
          {Scalar(0), Scalar::ratio(1, 2)},
          {Scalar::ratio(1, 6), Scalar::ratio(1, 6)},
          {Scalar::ratio(1, 2), Scalar(0)}};
}

}  // namespace

TEST(WeightForm, MatricesOfTheConicExample) {
  TorusBase b = TorusBase::exe();
  // verbatim classes at a = 2: L1 = F1 + F2 + 4D
  HermitianMatrix h1 = weight_form(b, cls(1, 1, 4));
  EXPECT_EQ(h1.re[0][0], Scalar(5));
  EXPECT_EQ(h1.re[0][1], Scalar(-4));
  EXPECT_EQ(h1.re[1][1], Scalar(5));
  HermitianMatrix h0 = weight_form(b, cls(2, -4, 2));
  EXPECT_DOUBLE_EQ(evaluate_weight(h0, {Complex(1, 0), kZero}), 4.0);
  EXPECT_DOUBLE_EQ(evaluate_weight(h0, {kZero, kZero}), 0.0);
  // c1(L0) = -6(l1 + sqrt3 l2), c1(L1) = 6(-l1 + a l3)
  Point l0 = to_l_basis(cls(2, -4, 2));
  EXPECT_NEAR(l0[0].value(), -6, 1e-12);
  EXPECT_NEAR(l0[1].value(), -6 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(l0[2].value(), 0, 1e-12);
  Point l1 = to_l_basis(cls(1, 1, 4));
  EXPECT_EQ(l1[0], Scalar(-6));
  EXPECT_EQ(l1[1], Scalar(0));
  EXPECT_EQ(l1[2], Scalar(12));
}

TEST(Psi, SingleTermClosedForm) {
  ToricBundle b(nakayama(2));
  ChartPoint p = at(0, Complex(std::exp(-1.0), 0), Complex(1, 0));
  EXPECT_NEAR(psi_sigma_m(b, p, {Scalar(1), Scalar(0)})->value(), -2.0, 1e-12);
  EXPECT_NEAR(psi_sigma_m(b, p, {Scalar::ratio(1, 2), Scalar::ratio(1, 2)})->value(), -1.0, 1e-12);
  EXPECT_THROW(psi_sigma_m(b, p, {Scalar(0), Scalar(0)}), MathError);
  // x1 = 0 kills every term with a positive first exponent
  ChartPoint q = at(0, kZero, Complex(0.5, 0));
  EXPECT_FALSE(psi_sigma_m(b, q, {Scalar(1), Scalar(0)}).has_value());
  EXPECT_TRUE(psi_sigma_m(b, q, {Scalar(0), Scalar(1)}).has_value());
}

TEST(Psi, SpecialPoints) {
  for (auto problem : {nakayama(2), ex62(1, 2), ex65()}) {
    ToricBundle b(problem);
    PsiEvaluator psi(b);
    for (size_t s = 0; s < 3; ++s) {
      auto v = psi(at(s, Complex(1, 0), Complex(0, 1)));
      ASSERT_TRUE(v.has_value());
      EXPECT_EQ(*v, Scalar(0));
    }
  }
  ToricBundle n(nakayama(2));
  EXPECT_FALSE(psi_sigma(n, n.named_point("P(L0)")).has_value());
  EXPECT_TRUE(psi_sigma(n, n.named_point("P(L1)")).has_value());
}

TEST(Psi, PentagonVertexMaximum) {
  ToricBundle b(ex62(1, 2));
  PsiEvaluator psi(b);
  std::mt19937_64 rng(oracle::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    ChartPoint p = oracle::random_torus_point(rng, 3);
    double best = -1e300;
    for (const auto &v : pentagon()) best = std::max(best, psi_sigma_m(b, p, v)->value());
    EXPECT_NEAR(psi(p)->value(), best, 1e-9 * std::max(1.0, std::fabs(best)));
  }
}

TEST(Psi, DominatesEveryTerm) {
  std::mt19937_64 rng(oracle::kSeed + 1);
  std::uniform_real_distribution<double> u(0, 1);
  for (auto problem : {nakayama(3), ex65()}) {
    ToricBundle b(problem);
    PsiEvaluator psi(b);
    for (int trial = 0; trial < 100; ++trial) {
      ChartPoint p = oracle::random_torus_point(rng, 3);
      double top = psi(p)->value();
      for (int k = 0; k < 20; ++k) {
        double m1 = u(rng), m2 = u(rng);
        if (!oracle::nef_box_contains(problem, m1, m2, -1e-9)) continue;
        EXPECT_LE(psi_sigma_m(b, p, {Scalar::approx(m1), Scalar::approx(m2)})->value(), top + 1e-9);
      }
    }
  }
}

TEST(Psi, GlueTransitions) {
  std::mt19937_64 rng(oracle::kSeed + 2);
  for (auto problem : {nakayama(2), ex62(1, 2), ex65()}) {
    ToricBundle b(problem);
    PsiEvaluator psi(b);
    for (int trial = 0; trial < 200; ++trial) {
      ChartPoint p = oracle::random_torus_point(rng, 3);
      EXPECT_EQ(glue_check(psi, b, p, p.sigma), 0.0);
      for (size_t t = 0; t < 3; ++t) EXPECT_LE(glue_check(psi, b, p, t), 1e-9);
    }
  }
}

TEST(Germ, ExampleGermIsScaledMaxOfThreeMonomials) {
  ToricBundle b(ex62(1, 2));
  LogMonomialWeight g = singularity_germ(b, b.named_point("P(L0)"));
  LogMonomialWeight ref =
      LogMonomialWeight::from_exponents({0, 1}, {{Scalar(6), Scalar(0)}, {Scalar(0), Scalar(6)}, {Scalar(2), Scalar(2)}})
          .scaled(Scalar::ratio(1, 12));
  EXPECT_EQ(compare_singularity(g, ref), SingularityOrder::Equivalent);
  EXPECT_EQ(g.exponents.size(), 3u);
  EXPECT_TRUE(singularity_germ(b, b.named_point("generic")).trivial());
}

TEST(Germ, Comparisons) {
  auto one = LogMonomialWeight::from_exponents({0, 1}, {{Scalar(1), Scalar(0)}});
  auto both = LogMonomialWeight::from_exponents({0, 1}, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
  auto other = LogMonomialWeight::from_exponents({0, 1}, {{Scalar(0), Scalar(1)}});
  EXPECT_EQ(compare_singularity(one, both), SingularityOrder::Less);
  EXPECT_EQ(compare_singularity(both, one), SingularityOrder::Greater);
  EXPECT_EQ(compare_singularity(one, other), SingularityOrder::Incomparable);
  ToricBundle n(nakayama(2));
  auto conic = singularity_germ(n, n.named_point("P(L0)"));
  EXPECT_EQ(compare_singularity(conic, conic), SingularityOrder::Equivalent);
  // scaling the exponents up makes a germ more singular
  EXPECT_EQ(compare_singularity(conic.scaled(Scalar(2)), conic), SingularityOrder::Less);
}

TEST(SectionEnvelope, ExactOnRationalPolytope) {
  ToricBundle b(ex62(1, 2));
  PsiEvaluator psi(b);
  SectionEnvelope env(b, 6);
  std::mt19937_64 rng(oracle::kSeed + 3);
  for (int trial = 0; trial < 100; ++trial) {
    ChartPoint p = oracle::random_torus_point(rng, 3);
    double want = psi(p)->value();
    EXPECT_NEAR(env(psi, p).value(), want, 1e-9 * std::max(1.0, std::fabs(want)));
  }
}

TEST(SectionEnvelope, MonotoneBelowPsi) {
  ToricBundle b(nakayama(2));
  PsiEvaluator psi(b);
  std::mt19937_64 rng(oracle::kSeed + 4);
  SectionEnvelope e1(b, 10), e2(b, 100);
  for (int trial = 0; trial < 20; ++trial) {
    ChartPoint p = oracle::random_torus_point(rng, 3);
    double v1 = e1(psi, p).value(), v2 = e2(psi, p).value(), top = psi(p)->value();
    EXPECT_LE(v1, v2 + 1e-9);
    EXPECT_LE(v2, top + 1e-9);
  }
}

TEST(SectionEnvelope, ReportsMissingSections) {
  // box_nef = { m1, m2 >= 1/3, m1 + m2 <= 1 } has no lattice point at nu = 1
  ToricBundle b(p2_bundle(cls(-1, -1, 0), cls(2, -1, 0), cls(-1, 2, 0)));
  try {
    SectionEnvelope env(b, 1);
    FAIL() << "expected NoSections";
  } catch (const MathError &e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSections);
  }
  SectionEnvelope env3(b, 3);
  EXPECT_EQ(env3.lattice_point_count(), 3u);  // (1,1), (1,2), (2,1)
}
