#include "toricmin/fixtures.hpp"

namespace toricmin {

namespace {

NSClass cls(long p, long q, long r) { return NSClass{Scalar(p), Scalar(q), Scalar(r)}; }

}  // namespace

BundleProblem p2_bundle(const NSClass &l0, const NSClass &l1, const NSClass &l2) {
  BundleProblem p;
  p.base = TorusBase::exe();
  p.fan.rays = {{-1, -1}, {1, 0}, {0, 1}};
  p.fan.max_cones = {{1, 2}, {2, 0}, {0, 1}};
  p.h = {Scalar(-1), Scalar(0), Scalar(0)};
  p.L0 = l0;
  p.L_hom = {sub(l1, l0), sub(l2, l0)};
  std::vector<Complex> zero2{Complex(0, 0), Complex(0, 0)};
  for (std::size_t i = 0; i < 3; ++i) p.points["P(L" + std::to_string(i) + ")"] = ChartPoint{i, zero2, zero2};
  p.points["generic"] = ChartPoint{0, {Complex(0.5, 0), Complex(0, 0.25)}, {Complex(0.1, 0), Complex(0, 0.2)}};
  return p;
}

BundleProblem nakayama(long a, bool literal_classes) {
  if (literal_classes) return p2_bundle(cls(2, -4, 2), cls(a - 1, a - 1, a + 2), cls(a + 3, a - 3, a));
  return p2_bundle(cls(2, 0, -1), cls(a + 1, a - 1, 0), cls(a + 1, a + 1, -1));
}

BundleProblem ex62(long u, long v) {
  return p2_bundle(cls(-u, -u, -u), cls(u + v, u + v, v - 2 * u), cls(v - u, v - u, 2 * u + v));
}

BundleProblem ex65() { return p2_bundle(cls(4, 4, 1), cls(0, 0, 0), cls(-1, 9, 1)); }

}  // namespace toricmin
