#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace oracle {

namespace {

// The nef box in doubles: ray inequalities and the ExE weight form.
struct NefBox {
  std::vector<std::array<double, 3>> rays;  // v1, v2, h(v)
  double c0[3], c1[3], c2[3];

  explicit NefBox(const BundleProblem &p) {
    for (size_t i = 0; i < p.fan.rays.size(); ++i)
      rays.push_back({double(p.fan.rays[i][0]), double(p.fan.rays[i][1]), p.h[i].value()});
    for (int k = 0; k < 3; ++k) {
      c0[k] = p.L0[k].value();
      c1[k] = p.L_hom[0][k].value();
      c2[k] = p.L_hom[1][k].value();
    }
  }

  bool contains(double m1, double m2, double tol) const {
    for (const auto &r : rays)
      if (m1 * r[0] + m2 * r[1] - r[2] < -tol) return false;
    double c[3];
    for (int k = 0; k < 3; ++k) c[k] = c0[k] + m1 * c1[k] + m2 * c2[k];
    double a = c[0] + c[2], d = c[1] + c[2], b = -c[2];
    return a + d >= -tol && a * d - b * b >= -tol;
  }
};

}  // namespace

bool nef_box_contains(const BundleProblem &p, double m1, double m2, double tol) {
  return NefBox(p).contains(m1, m2, tol);
}

double boundary_min(const BundleProblem &p, double c1, double c2, int steps) {
  NefBox box(p);
  // An interior point: centroid of the feasible points of a grid over the
  // standard simplex, where every fixture lives.
  double cx = 0, cy = 0;
  int count = 0;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j <= steps; ++j) {
      double m1 = double(i) / steps, m2 = double(j) / steps;
      if (box.contains(m1, m2, 0)) {
        cx += m1;
        cy += m2;
        ++count;
      }
    }
  if (count == 0) return std::numeric_limits<double>::infinity();
  cx /= count;
  cy /= count;
  // Boundary point in direction phi by bisection on the pointwise test, then
  // the smallest <c, b(phi)> over a fine angle grid, refined by golden section.
  auto value = [&](double phi) {
    double dx = std::cos(phi), dy = std::sin(phi), lo = 0, hi = 4;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (lo + hi);
      if (box.contains(cx + mid * dx, cy + mid * dy, 0)) lo = mid;
      else hi = mid;
    }
    return c1 * (cx + lo * dx) + c2 * (cy + lo * dy);
  };
  const int n = 20 * steps;
  const double two_pi = 4 * std::acos(0.0);
  double best = std::numeric_limits<double>::infinity(), best_phi = 0;
  for (int i = 0; i < n; ++i) {
    double phi = two_pi * i / n, v = value(phi);
    if (v < best) {
      best = v;
      best_phi = phi;
    }
  }
  double a = best_phi - two_pi / n, b = best_phi + two_pi / n;
  const double gr = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 80; ++it) {
    double c = b - gr * (b - a), d = a + gr * (b - a);
    if (value(c) < value(d)) b = d;
    else a = c;
  }
  return std::min(best, value(0.5 * (a + b)));
}

double support_from_psi(const PsiEvaluator &psi, std::size_t sigma, double th1, double th2) {
  ChartPoint x{sigma, {Complex(std::exp(-th1), 0), Complex(std::exp(-th2), 0)}, {Complex(0, 0), Complex(0, 0)}};
  return -psi(x)->value() / 2.0;
}

Quadrature log_radial_integral(const PsiEvaluator &psi, std::size_t sigma, long p1, long p2, double t) {
  const double q1 = static_cast<double>(p1 + 1), q2 = static_cast<double>(p2 + 1);
  auto g = [&](double phi) {
    double c = std::cos(phi), s = std::sin(phi);
    return q1 * c + q2 * s - t * support_from_psi(psi, sigma, c, s);
  };
  const int n = 2000;
  const double half_pi = std::acos(0.0);
  Quadrature out;
  double best = std::numeric_limits<double>::infinity(), best_phi = 0;
  double integral = 0;
  bool finite = true;
  for (int i = 0; i <= n; ++i) {
    double phi = half_pi * i / n;
    double v = g(phi);
    if (v < best) {
      best = v;
      best_phi = phi;
    }
    if (v <= 0) {
      finite = false;
      continue;
    }
    // int_1^inf rho exp(-2 rho v) d rho
    double inner = std::exp(-2 * v) * (2 * v + 1) / (4 * v * v);
    double w = (i == 0 || i == n) ? 0.5 : 1.0;
    integral += w * inner * half_pi / n;
  }
  // golden-section refinement of the minimum around the best grid cell
  double a = std::max(0.0, best_phi - half_pi / n), b = std::min(half_pi, best_phi + half_pi / n);
  const double gr = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 60; ++it) {
    double c = b - gr * (b - a), d = a + gr * (b - a);
    if (g(c) < g(d)) b = d;
    else a = c;
  }
  best = std::min({best, g(0.5 * (a + b)), g(a), g(b)});
  if (best <= 0) finite = false;
  out.finite = finite;
  out.min_exponent = best;
  out.value = finite ? integral : std::numeric_limits<double>::infinity();
  return out;
}

bool overline_by_definition(const std::vector<IntVector> &a, const Cone &sigma, const Point &m) {
  std::vector<Point> dirs;
  for (const auto &g : sigma.generators) dirs.push_back(to_point(g));
  // directions of sigma where two elements of A tie
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) {
      IntVector d{a[j][0] - a[i][0], a[j][1] - a[i][1]};
      for (int s : {1, -1}) {
        Point w{Scalar(static_cast<long>(-s * d[1])), Scalar(static_cast<long>(s * d[0]))};
        if (sigma.contains(w) && !(w[0].is_zero() && w[1].is_zero())) dirs.push_back(w);
      }
    }
  for (const auto &w : dirs) {
    Scalar lo = dot(to_point(a[0]), w);
    for (const auto &x : a) lo = min(lo, dot(to_point(x), w));
    if (dot(m, w) < lo) return false;
  }
  return true;
}

ChartPoint random_torus_point(std::mt19937_64 &rng, std::size_t sigma_count) {
  std::uniform_int_distribution<std::size_t> pick(0, sigma_count - 1);
  std::uniform_real_distribution<double> logmod(-3.0, 3.0), phase(0.0, 6.283185307179586), zc(-1.0, 1.0);
  ChartPoint p;
  p.sigma = pick(rng);
  for (int j = 0; j < 2; ++j) p.x.push_back(std::polar(std::exp(logmod(rng)), phase(rng)));
  for (int j = 0; j < 2; ++j) p.z.push_back(Complex(zc(rng), zc(rng)));
  return p;
}

ChartPoint random_point(std::mt19937_64 &rng, std::size_t sigma_count) {
  ChartPoint p = random_torus_point(rng, sigma_count);
  std::bernoulli_distribution zero(0.5);
  for (auto &x : p.x)
    if (zero(rng)) x = Complex(0, 0);
  return p;
}

}  // namespace oracle
