#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "toricmin/fixtures.hpp"
#include "toricmin/mult_ideal.hpp"

using namespace toricmin;

namespace {

NSClass cls(long a, long b, long c) { return NSClass{Scalar(a), Scalar(b), Scalar(c)}; }

Monomial mono(long a, long b) { return Monomial{IntVector{a, b}}; }

bool divisible_by_some(const Monomial &m, const std::vector<Monomial> &gens) {
  for (const auto &g : gens)
    if (g.exponents[0] <= m.exponents[0] && g.exponents[1] <= m.exponents[1]) return true;
  return false;
}

// L^nu = (L0^nu, nu h) with the same twist: box_nef and S scale by nu and
// psi by nu, so jumps divide by nu.
BundleProblem scaled_problem(BundleProblem p, long nu) {
  for (auto &x : p.L0) x *= Scalar(nu);
  for (auto &x : p.h) x *= Scalar(nu);
  return p;
}

}  // namespace

TEST(NewtonSet, ReadOff) {
  ToricBundle b(ex62(1, 2));
  ChartPoint x0 = b.named_point("P(L0)");
  EXPECT_EQ(newton_set(b, {mono(0, 0)}, x0), (std::vector<IntVector>{{0, 0}}));
  EXPECT_EQ(newton_set(b, {mono(2, 1)}, x0), (std::vector<IntVector>{{2, 1}}));
  EXPECT_EQ(newton_set(b, {mono(2, 0), mono(0, 3)}, x0), (std::vector<IntVector>{{2, 0}, {0, 3}}));
}

TEST(Membership, ConicExample) {
  ToricBundle b(nakayama(2));
  ChartPoint x0 = b.named_point("P(L0)");
  EXPECT_TRUE(in_multiplier_ideal(b, x0, {mono(0, 0)}, Scalar(1)));
  EXPECT_FALSE(in_multiplier_ideal(b, x0, {mono(0, 0)}, Scalar(4)));
  EXPECT_THROW(in_multiplier_ideal(b, x0, {}, Scalar(1)), MathError);
  EXPECT_THROW(in_multiplier_ideal(b, x0, {mono(0, 0)}, Scalar(0)), MathError);
  // (1,1) is interior to S_1
  EXPECT_EQ(ideal_generators(b, x0, Scalar(1)), (std::vector<Monomial>{mono(0, 0)}));
}

TEST(Membership, NotBigIsReported) {
  ToricBundle flat(p2_bundle(cls(0, 0, 0), cls(0, 0, 0), cls(0, 0, 0)));
  try {
    in_multiplier_ideal(flat, flat.named_point("P(L0)"), {mono(0, 0)}, Scalar(1));
    FAIL() << "expected NotBig";
  } catch (const MathError &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBig);
  }
}

TEST(Membership, ClosedAtTheThreshold) {
  ToricBundle b(ex62(1, 2));
  ChartPoint x0 = b.named_point("P(L0)");
  EXPECT_FALSE(in_multiplier_ideal(b, x0, {mono(0, 0)}, Scalar(6)));
  EXPECT_TRUE(in_multiplier_ideal(b, x0, {mono(0, 0)}, Scalar(6) - Scalar::ratio(1, 1000000)));
  EXPECT_EQ(*lct(b, x0), Scalar(6));
  EXPECT_TRUE(lct(b, x0)->is_exact());
}

TEST(Generators, MatchMonomialwiseMembership) {
  for (auto problem : {nakayama(2), ex62(1, 2), ex65()}) {
    ToricBundle b(problem);
    ChartPoint x0 = b.named_point(problem == ex65() ? "P(L2)" : "P(L0)");
    for (Scalar t : {Scalar::ratio(9, 2), Scalar::ratio(37, 5), Scalar(11) + Scalar::ratio(1, 7)}) {
      auto gens = ideal_generators(b, x0, t);
      ASSERT_FALSE(gens.empty());
      IntVector bound = default_degree_bound(b, x0, t);
      for (long p = 0; p <= bound[0]; ++p)
        for (long q = 0; q <= bound[1]; ++q) {
          bool member;
          try {
            member = in_multiplier_ideal(b, x0, {mono(p, q)}, t);
          } catch (const MathError &e) {
            ASSERT_EQ(e.code(), ErrorCode::BoundaryAmbiguous);
            continue;
          }
          EXPECT_EQ(member, divisible_by_some(mono(p, q), gens)) << p << "," << q << " t=" << t;
        }
    }
  }
}

TEST(Generators, MonotoneInT) {
  std::mt19937_64 rng(oracle::kSeed);
  std::uniform_int_distribution<long> num(10, 200);
  for (auto problem : {nakayama(2), ex62(1, 2)}) {
    ToricBundle b(problem);
    ChartPoint x0 = b.named_point("P(L0)");
    for (int trial = 0; trial < 10; ++trial) {
      long a = num(rng), c = num(rng);
      Scalar t1 = Scalar::ratio(std::min(a, c), 10), t2 = Scalar::ratio(std::max(a, c), 10);
      auto g1 = ideal_generators(b, x0, t1), g2 = ideal_generators(b, x0, t2);
      for (const auto &g : g2) EXPECT_TRUE(divisible_by_some(g, g1)) << t1 << " " << t2;
    }
  }
}

TEST(Jumps, LctIsSmallestJump) {
  for (long a : {2, 3, 5}) {
    ToricBundle b(nakayama(a));
    ChartPoint x0 = b.named_point("P(L0)");
    auto l = lct(b, x0);
    ASSERT_TRUE(l.has_value());
    EXPECT_NEAR(l->value(), std::sqrt(2.0) * a + 1, 1e-9);
    auto spectrum = jumping_numbers(b, x0, Scalar(15));
    ASSERT_FALSE(spectrum.jumps.empty());
    EXPECT_NEAR(spectrum.jumps.front().value.value(), l->value(), 1e-12);
    for (size_t i = 1; i < spectrum.jumps.size(); ++i) EXPECT_LT(spectrum.jumps[i - 1].value, spectrum.jumps[i].value);
  }
}

TEST(Jumps, PeriodOfPolyhedralExample) {
  ToricBundle b(ex62(1, 2));
  auto values = jumping_numbers(b, b.named_point("P(L0)"), Scalar(32)).values();
  for (const auto &v : values) {
    EXPECT_TRUE(v.is_exact());
    if (v + Scalar(12) <= Scalar(32))
      EXPECT_NE(std::find(values.begin(), values.end(), v + Scalar(12)), values.end()) << v;
  }
}

TEST(Jumps, InvariantUnderScaling) {
  for (auto problem : {nakayama(2), ex62(1, 2)}) {
    ToricBundle b(problem);
    ToricBundle b3(scaled_problem(problem, 3));
    ChartPoint x0 = b.named_point("P(L0)");
    for (long p = 1; p <= 5; ++p)
      for (long q = 1; q <= 5; ++q) {
        auto j1 = monomial_jump(b, x0, {p, q});
        auto j3 = monomial_jump(b3, x0, {p, q});
        ASSERT_TRUE(j1 && j3);
        EXPECT_NEAR(j1->value(), 3 * j3->value(), 1e-9 * j1->value());
      }
  }
}

TEST(Jumps, DivisorPointsAndTheQuadratureOracle) {
  // On the fixtures the divisors carry no negative part: bounded weight
  ToricBundle n(nakayama(2));
  ChartPoint on_divisor{0, {Complex(0, 0), Complex(0.5, 0.1)}, {Complex(0.3, 0), Complex(0, 0)}};
  EXPECT_FALSE(lct(n, on_divisor).has_value());
  PsiEvaluator psi_n(n);
  EXPECT_NEAR(oracle::support_from_psi(psi_n, 0, 1, 0), 0.0, 1e-12);

  // box_nef bounded away from m1 = 0: the divisor of v1 has coefficient 1/3
  ToricBundle b(p2_bundle(cls(-1, -1, 0), cls(2, -1, 0), cls(-1, 2, 0)));
  PsiEvaluator psi(b);
  double mu = oracle::support_from_psi(psi, 0, 1, 0);
  EXPECT_NEAR(mu, 1.0 / 3.0, 1e-12);
  auto l = lct(b, on_divisor);
  ASSERT_TRUE(l.has_value());
  EXPECT_EQ(*l, Scalar(3));
  // |x1^p|^2 exp(-t psi) is integrable near x1 = 0 iff p + 1 - t mu > 0
  for (long p = 0; p < 4; ++p)
    for (double t : {0.5, 2.9, 3.1, 5.5, 8.9, 9.1, 12.2}) {
      bool finite = (p + 1) - t * mu > 0;
      Scalar ts = Scalar::ratio(std::lround(t * 10), 10);
      EXPECT_EQ(in_multiplier_ideal(b, on_divisor, {mono(p, 0)}, ts), finite) << p << " " << t;
    }
}

TEST(Openness, Cases) {
  ToricBundle b(nakayama(2));
  ChartPoint x0 = b.named_point("P(L0)");
  double l = lct(b, x0)->value();
  auto half = openness_check(b, x0, {mono(0, 0)}, Scalar::approx(l / 2));
  EXPECT_TRUE(half.member && half.passed);
  auto near = openness_check(b, x0, {mono(0, 0)}, Scalar::approx(l - 1e-4));
  EXPECT_TRUE(near.member && near.passed);
  ASSERT_TRUE(near.epsilon.has_value());
  EXPECT_EQ(*near.epsilon, 1e-6);
  auto above = openness_check(b, x0, {mono(0, 0)}, Scalar(4));
  EXPECT_FALSE(above.member);
  EXPECT_TRUE(above.passed);
}

TEST(Sections, PolyhedralExample) {
  ToricBundle b(ex62(1, 2));
  SectionCount sc = section_count(b);
  ASSERT_TRUE(sc.total.has_value());
  EXPECT_EQ(*sc.total, Scalar(18));
  ASSERT_EQ(sc.per_point.size(), 2u);
  for (const auto &e : sc.per_point) {
    ASSERT_TRUE(e.count.has_value());
    EXPECT_EQ(*e.count, Scalar(9));
    // the classes L1 and L2 of the fixture
    EXPECT_EQ(e.cls, (e.m == IntVector{1, 0} ? cls(3, 3, 0) : cls(1, 1, 4)));
  }
}

TEST(Sections, ConicExampleClassifier) {
  ToricBundle b(nakayama(2));
  SectionCount sc = section_count(b);
  ASSERT_EQ(sc.per_point.size(), 2u);  // (1,0) and (0,1)
  for (const auto &e : sc.per_point) {
    EXPECT_EQ(e.count.has_value(), is_ample(b.base(), e.cls));
    if (e.count) EXPECT_EQ(*e.count, self_intersection(b.base(), e.cls) / Scalar(2));
  }
}

TEST(Sections, EmptyBoxCountsZero) {
  ToricBundle neg(p2_bundle(cls(-1, -1, 0), cls(-1, -1, 0), cls(-1, -1, 0)));
  SectionCount sc = section_count(neg);
  EXPECT_TRUE(sc.per_point.empty());
  ASSERT_TRUE(sc.total.has_value());
  EXPECT_EQ(*sc.total, Scalar(0));
}
