#pragma once

#include <optional>
#include <vector>

#include "toricmin/envelope.hpp"
#include "toricmin/toric_bundle.hpp"

namespace toricmin {

// x^p in the fiber coordinates of a chart; z-dependence is a unit.
struct Monomial {
  IntVector exponents;

  friend bool operator==(const Monomial &a, const Monomial &b) { return a.exponents == b.exponents; }
  friend bool operator<(const Monomial &a, const Monomial &b) { return a.exponents < b.exponents; }
};

// A finite sum of monomials with nonzero coefficients. For toric weights the
// coefficients never matter, so only the support is kept.
using Polynomial = std::vector<Monomial>;

// { sum_{j in I} p_j v^j } over the monomials of f, I = zero set of x0.
std::vector<IntVector> newton_set(const ToricBundle &bundle, const Polynomial &f, const ChartPoint &x0);

// f in J(t psi) at x0: for every monomial, (p_I + 1) lies in the interior of
// t Pr_I S. Throws ZeroFunction for f = 0, NotBig when L is known not to be
// big, BoundaryAmbiguous when a point is within tolerance of the boundary.
bool in_multiplier_ideal(const ToricBundle &bundle, const ChartPoint &x0, const Polynomial &f, const Scalar &t);

// Per-coordinate exponent bound for generators at t: floor(t beta_j) + 2,
// beta_j the largest j-th exponent coordinate over box_nef.
IntVector default_degree_bound(const ToricBundle &bundle, const ChartPoint &x0, const Scalar &t);

// Minimal monomial generators (in the vanishing coordinates) of J(t psi)_x0.
std::vector<Monomial> ideal_generators(const ToricBundle &bundle, const ChartPoint &x0, const Scalar &t,
                                       const std::optional<IntVector> &degree_bound = std::nullopt);

// sup { t : q in Int(t Pr_I S) } for q = p_I + 1; nullopt when the monomial
// never leaves the ideal. Like everything below, throws NotBig when L is
// known not to be big.
std::optional<Scalar> monomial_jump(const ToricBundle &bundle, const ChartPoint &x0, const IntVector &q);

struct Jump {
  Scalar value;
  std::vector<IntVector> points;  // the q = p + 1 realizing it
};

struct JumpingSpectrum {
  std::vector<Jump> jumps;  // strictly increasing
  std::vector<Scalar> values() const;
};

JumpingSpectrum jumping_numbers(const ToricBundle &bundle, const ChartPoint &x0, const Scalar &bound);

// First jumping number; nullopt (+infinity) where the weight is bounded.
std::optional<Scalar> lct(const ToricBundle &bundle, const ChartPoint &x0);

struct OpennessResult {
  bool member = false;              // f in J(t psi)
  std::optional<double> epsilon;    // smallest tested eps with f in J((1+eps) t psi)
  bool passed = false;              // vacuous for non-members
};

OpennessResult openness_check(const ToricBundle &bundle, const ChartPoint &x0, const Polynomial &f, const Scalar &t);

struct SectionCount {
  struct Entry {
    IntVector m;
    NSClass cls;
    std::optional<Scalar> count;  // nullopt: nef but not ample, count unknown
  };
  std::vector<Entry> per_point;
  std::optional<Scalar> total;  // nullopt when some entry is unknown
};

SectionCount section_count(const ToricBundle &bundle);

}  // namespace toricmin
