#include "toricmin/lattice_points.hpp"

#include <cmath>

#include "toricmin/errors.hpp"
#include "toricmin/optimize.hpp"

namespace toricmin {

namespace {

std::int64_t floor_of(const Scalar &s) {
  if (s.is_exact()) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), s.exact().get_num_mpz_t(), s.exact().get_den_mpz_t());
    return f.get_si();
  }
  // Widen by the tolerance so that near-integers are not lost.
  return static_cast<std::int64_t>(std::floor(s.value() + s.tolerance() * std::max(1.0, std::fabs(s.value()))));
}

std::int64_t ceil_of(const Scalar &s) {
  if (s.is_exact()) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), s.exact().get_num_mpz_t(), s.exact().get_den_mpz_t());
    return c.get_si();
  }
  return static_cast<std::int64_t>(std::ceil(s.value() - s.tolerance() * std::max(1.0, std::fabs(s.value()))));
}

}  // namespace

IntBox bounding_box(const ConvexRegion &region) {
  size_t n = region.dim();
  IntBox box{IntVector(n), IntVector(n)};
  for (size_t i = 0; i < n; ++i) {
    Point e(n, Scalar(0));
    e[i] = Scalar(1);
    OptResult lo = minimize_linear(region, e);
    OptResult hi = maximize_linear(region, e);
    if (!lo.bounded() || !hi.bounded()) fail(ErrorCode::UnboundedRegion, "region is unbounded");
    box.first[i] = ceil_of(lo.value);
    box.second[i] = floor_of(hi.value);
  }
  return box;
}

std::vector<IntVector> lattice_points(const ConvexRegion &region, bool interior_only,
                                      const std::optional<IntBox> &box) {
  size_t n = region.dim();
  IntBox b;
  if (box) {
    b = *box;
  } else {
    if (region.has_recession()) fail(ErrorCode::UnboundedRegion, "region is unbounded; pass a box");
    b = bounding_box(region);
  }
  std::vector<IntVector> out;
  for (size_t i = 0; i < n; ++i)
    if (b.first[i] > b.second[i]) return out;
  IntVector cur = b.first;
  while (true) {
    Point p = to_point(cur);
    bool in = interior_only ? in_interior(region, p) : contains(region, p);
    if (in) out.push_back(cur);
    size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] < b.second[k]) {
        ++cur[k];
        for (size_t j = k + 1; j < n; ++j) cur[j] = b.first[j];
        break;
      }
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace toricmin
