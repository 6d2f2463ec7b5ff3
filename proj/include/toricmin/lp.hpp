#pragma once

#include <vector>

#include "toricmin/region.hpp"

namespace toricmin {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Point x;
  Scalar value;
};

// minimize <objective, x> subject to f(x) >= 0 for every f, x free.
// Dense two-phase simplex with Bland's rule. Exact when the data is exact.
LpResult solve_lp(const std::vector<AffineForm> &constraints, const Point &objective);

// Same, but among the optimal points return the lexicographically smallest.
LpResult solve_lp_lexmin(const std::vector<AffineForm> &constraints, const Point &objective);

}  // namespace toricmin
