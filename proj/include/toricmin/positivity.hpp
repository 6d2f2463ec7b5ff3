#pragma once

#include <map>
#include <string>
#include <vector>

#include "toricmin/toric_bundle.hpp"

namespace toricmin {

// S(L0,h)_sigma = closure of { m - m_sigma : m in box_nef } + sigma^vee.
struct SSet {
  std::size_t sigma = 0;
  ConvexRegion region;    // in M_R, recession generated by the dual basis
  ConvexRegion exponent;  // the same set in exponent coordinates, recession = orthant
};

SSet s_set(const ToricBundle &bundle, std::size_t sigma);

// min over S of <m, sum_{j in I} v_j / w_j>, I = zero set of x0 and w given
// per element of I in increasing order. Throws NotBig when L is known not
// to be big.
Scalar kiselman_number(const ToricBundle &bundle, const ChartPoint &x0, const std::vector<Scalar> &w);
Scalar lelong_number(const ToricBundle &bundle, const ChartPoint &x0);

struct Stratum {
  std::vector<std::size_t> rays;  // the cone tau, as ray indices
  Scalar lelong;                  // generic Lelong number along O_tau
  std::string name;               // matching named point, if any
};

struct StratumReport {
  std::vector<Stratum> strata;  // every nonzero cone of the fan

  std::vector<Stratum> positive() const;
  // value(tau) <= value(tau') whenever tau is a face of tau'.
  bool face_closed() const;
};

StratumReport nnef_locus(const ToricBundle &bundle);

// Coefficient of Gamma_v in N(L) for every ray v: min over box_nef of
// <m, v> - h(v).
std::map<std::size_t, Scalar> negative_part(const ToricBundle &bundle);
// The same coefficients computed in the exponent coordinates of one chart.
std::map<std::size_t, Scalar> negative_part_in_chart(const ToricBundle &bundle, std::size_t sigma);

enum class Polyhedrality { RationalPolyhedral, NonPolyhedralOrIrrational };
const char *polyhedrality_name(Polyhedrality p);
Polyhedrality zariski_polyhedrality(const ToricBundle &bundle);

}  // namespace toricmin
