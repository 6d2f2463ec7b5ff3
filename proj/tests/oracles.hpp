#pragma once

// Independent reference computations used by the test suites. None of these
// go through the S-set, ray-entry or interior-margin code they are checked
// against.

#include <random>
#include <vector>

#include "toricmin/envelope.hpp"
#include "toricmin/toric_bundle.hpp"

namespace oracle {

using namespace toricmin;

constexpr std::uint64_t kSeed = 20240917;

// Brute-force membership in the nef box: box_h inequalities and 2x2 PSD test
// of the weight form, in doubles.
bool nef_box_contains(const BundleProblem &p, double m1, double m2, double tol = 1e-12);

// Minimum of <c, m> over the nef box, found on its boundary: rays from an
// interior point are cut by bisection on the pointwise test above.
double boundary_min(const BundleProblem &p, double c1, double c2, int steps = 400);

// Lower support function h(theta) = min over S of <y, theta> read off from
// psi_sigma at x_j = exp(-theta_j), z = 0 (psi = -2 h there).
double support_from_psi(const PsiEvaluator &psi, std::size_t sigma, double th1, double th2);

struct Quadrature {
  bool finite = false;
  double min_exponent = 0;  // min over directions of <q, theta> - t h(theta)
  double value = 0;         // integral over the log-radial region |r| >= 1
};

// Integrability of |x^p|^2 exp(-t psi) near the origin of chart sigma
// (both fiber coordinates vanishing). In log-radii r_j = -log|x_j| the
// integrand is exp(-2 <p + 1, r> + 2 t h(r)); in polar form r = rho theta the
// rho-integral is done in closed form and theta by a grid with golden-section
// refinement at the minimum.
Quadrature log_radial_integral(const PsiEvaluator &psi, std::size_t sigma, long p1, long p2, double t);

// Membership of m in the double-overline closure of A over sigma, straight
// from the definition: <m, w> >= min_a <a, w> for every w in sigma, checked
// on the rays of the subdivision of sigma into linearity cones of
// w -> min_a <a, w>.
bool overline_by_definition(const std::vector<IntVector> &a, const Cone &sigma, const Point &m);

ChartPoint random_torus_point(std::mt19937_64 &rng, std::size_t sigma_count);
ChartPoint random_point(std::mt19937_64 &rng, std::size_t sigma_count);

}  // namespace oracle
