#include "toricmin/positivity.hpp"

#include <algorithm>
#include <set>

#include "toricmin/boundary.hpp"
#include "toricmin/optimize.hpp"

namespace toricmin {

SSet s_set(const ToricBundle &bundle, std::size_t sigma) {
  SSet s;
  s.sigma = sigma;
  std::vector<Point> rec;
  for (const auto &d : bundle.duals(sigma)) rec.push_back(to_point(d));
  Point shift = scale(Scalar(-1), to_point(bundle.cartier(sigma)));
  s.region = bundle.box_nef().translated(shift).with_recession(rec);
  s.exponent = bundle.to_exponent(bundle.box_nef(), sigma).with_recession(standard_basis(bundle.n()));
  return s;
}

namespace {

void require_big(const ToricBundle &bundle) {
  if (is_big(bundle) == Bigness::NotBig) fail(ErrorCode::NotBig, "L is not big");
}

// min over box_nef of sum_j c_j (<m, v_j> - h(v_j)).
Scalar min_pairing(const ToricBundle &bundle, const std::vector<std::size_t> &rays, const std::vector<Scalar> &c) {
  const auto &prob = bundle.problem();
  Point dir(bundle.n(), Scalar(0));
  Scalar offset(0);
  for (size_t i = 0; i < rays.size(); ++i) {
    dir = add(dir, scale(c[i], to_point(prob.fan.rays[rays[i]])));
    offset += c[i] * prob.h[rays[i]];
  }
  if (rays.empty()) return Scalar(0);
  return minimize_linear(bundle.box_nef(), dir).value - offset;
}

}  // namespace

Scalar kiselman_number(const ToricBundle &bundle, const ChartPoint &x0, const std::vector<Scalar> &w) {
  bundle.check_point(x0);
  auto zeros = x0.zero_set();
  if (w.size() != zeros.size())
    fail(ErrorCode::ArityMismatch, "need one weight per vanishing coordinate (" + std::to_string(zeros.size()) + ")");
  for (const auto &x : w)
    if (x.sign() <= 0) fail(ErrorCode::InvalidInput, "Kiselman weights must be positive");
  require_big(bundle);
  std::vector<std::size_t> rays;
  std::vector<Scalar> c;
  for (size_t i = 0; i < zeros.size(); ++i) {
    rays.push_back(bundle.problem().fan.max_cones[x0.sigma][zeros[i]]);
    c.push_back(Scalar(1) / w[i]);
  }
  return min_pairing(bundle, rays, c);
}

Scalar lelong_number(const ToricBundle &bundle, const ChartPoint &x0) {
  return kiselman_number(bundle, x0, std::vector<Scalar>(x0.zero_set().size(), Scalar(1)));
}

std::vector<Stratum> StratumReport::positive() const {
  std::vector<Stratum> out;
  for (const auto &s : strata)
    if (s.lelong.sign() > 0) out.push_back(s);
  return out;
}

bool StratumReport::face_closed() const {
  for (const auto &a : strata)
    for (const auto &b : strata) {
      if (a.rays.size() >= b.rays.size()) continue;
      if (std::includes(b.rays.begin(), b.rays.end(), a.rays.begin(), a.rays.end()) && a.lelong > b.lelong) return false;
    }
  return true;
}

StratumReport nnef_locus(const ToricBundle &bundle) {
  require_big(bundle);
  const auto &prob = bundle.problem();
  std::set<std::vector<std::size_t>> cones;
  for (const auto &mc : prob.fan.max_cones) {
    size_t k = mc.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<std::size_t> tau;
      for (size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) tau.push_back(mc[i]);
      std::sort(tau.begin(), tau.end());
      cones.insert(tau);
    }
  }
  std::map<std::vector<std::size_t>, std::string> names;
  for (const auto &[name, pt] : prob.points) {
    if (pt.sigma >= prob.fan.max_cones.size()) continue;
    std::vector<std::size_t> tau;
    for (auto j : pt.zero_set()) tau.push_back(prob.fan.max_cones[pt.sigma][j]);
    std::sort(tau.begin(), tau.end());
    if (!tau.empty() && !names.count(tau)) names[tau] = name;
  }
  std::vector<std::vector<std::size_t>> ordered(cones.begin(), cones.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto &a, const auto &b) { return a.size() < b.size(); });
  StratumReport rep;
  for (const auto &tau : ordered) {
    Stratum s;
    s.rays = tau;
    s.lelong = min_pairing(bundle, tau, std::vector<Scalar>(tau.size(), Scalar(1)));
    auto it = names.find(tau);
    if (it != names.end()) s.name = it->second;
    rep.strata.push_back(s);
  }
  return rep;
}

std::map<std::size_t, Scalar> negative_part(const ToricBundle &bundle) {
  std::map<std::size_t, Scalar> out;
  for (size_t r = 0; r < bundle.problem().fan.rays.size(); ++r) out[r] = min_pairing(bundle, {r}, {Scalar(1)});
  return out;
}

std::map<std::size_t, Scalar> negative_part_in_chart(const ToricBundle &bundle, std::size_t sigma) {
  // <m, v> - h(v) = <m - m_sigma, v> + (<m_sigma, v> - h(v)), minimized over
  // the shifted box.
  const auto &prob = bundle.problem();
  Point ms = to_point(bundle.cartier(sigma));
  ConvexRegion shifted = bundle.box_nef().translated(scale(Scalar(-1), ms));
  std::map<std::size_t, Scalar> out;
  for (size_t r = 0; r < prob.fan.rays.size(); ++r) {
    Point v = to_point(prob.fan.rays[r]);
    out[r] = minimize_linear(shifted, v).value + dot(ms, v) - prob.h[r];
  }
  return out;
}

const char *polyhedrality_name(Polyhedrality p) {
  return p == Polyhedrality::RationalPolyhedral ? "RationalPolyhedral" : "NonPolyhedralOrIrrational";
}

Polyhedrality zariski_polyhedrality(const ToricBundle &bundle) {
  const ConvexRegion &nef = bundle.box_nef();
  if (bundle.n() != 2) {
    if (nef.is_polyhedral() && nef.is_exact()) return Polyhedrality::RationalPolyhedral;
    fail(ErrorCode::UnsupportedDimension, "curved box_nef needs fiber rank 2");
  }
  return trace_boundary(nef).rational_polyhedral() ? Polyhedrality::RationalPolyhedral
                                                    : Polyhedrality::NonPolyhedralOrIrrational;
}

}  // namespace toricmin
