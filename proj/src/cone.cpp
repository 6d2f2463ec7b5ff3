#include "toricmin/cone.hpp"

#include <algorithm>

#include "toricmin/errors.hpp"

namespace toricmin {

IntMatrix Cone::generator_matrix() const {
  size_t n = dim();
  IntMatrix m(n, IntVector(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j)
    for (size_t i = 0; i < n; ++i) m[i][j] = generators[j][i];
  return m;
}

bool Cone::is_simplicial_full() const {
  if (generators.size() != dim() || generators.empty()) return false;
  return int_determinant(generator_matrix()) != 0;
}

bool Cone::is_smooth() const {
  if (generators.size() != dim() || generators.empty()) return false;
  auto d = int_determinant(generator_matrix());
  return d == 1 || d == -1;
}

Point Cone::coordinates(const Point &w) const {
  if (!is_simplicial_full()) fail(ErrorCode::UnsupportedDimension, "cone is not full simplicial");
  auto sol = solve(to_matrix(generator_matrix()), w);
  return *sol;
}

bool Cone::contains(const Point &w) const {
  Point c = coordinates(w);
  for (const auto &x : c)
    if (x.sign() < 0) return false;
  return true;
}

bool operator==(const Cone &a, const Cone &b) { return a.generators == b.generators; }

std::vector<IntVector> dual_basis(const Cone &c) {
  if (!c.is_smooth()) fail(ErrorCode::NonSmoothCone, "cone is not smooth");
  // Rows of G^{-1} pair to delta with the columns of G.
  auto inv = unimodular_inverse(c.generator_matrix());
  return *inv;
}

Cone dual_cone(const Cone &c) { return Cone{dual_basis(c)}; }

bool same_generators(const Cone &a, const Cone &b) {
  auto x = a.generators, y = b.generators;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

IntVector primitive(const IntVector &v) {
  auto g = gcd_of(v);
  if (g == 0) return v;
  IntVector r(v);
  for (auto &x : r) x /= g;
  return r;
}

}  // namespace toricmin
