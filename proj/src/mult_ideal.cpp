#include "toricmin/mult_ideal.hpp"

#include <algorithm>
#include <cmath>

#include "toricmin/lattice_points.hpp"
#include "toricmin/optimize.hpp"

namespace toricmin {

namespace {

IntVector restrict_to(const IntVector &p, const std::vector<std::size_t> &coords) {
  IntVector out;
  for (auto j : coords) out.push_back(p.at(j));
  return out;
}

void check_monomial(const ToricBundle &bundle, const Monomial &m) {
  if (m.exponents.size() != bundle.n()) fail(ErrorCode::ArityMismatch, "monomial needs one exponent per fiber coordinate");
  for (auto e : m.exponents)
    if (e < 0) fail(ErrorCode::InvalidInput, "monomial exponents must be nonnegative");
}

void require_big(const ToricBundle &bundle) {
  if (is_big(bundle) == Bigness::NotBig) fail(ErrorCode::NotBig, "L is not big");
}

Point shifted(const IntVector &p) {
  Point q;
  for (auto e : p) q.push_back(Scalar(static_cast<long>(e + 1)));
  return q;
}

// a <= b coordinatewise, i.e. x^a divides x^b
bool divides(const IntVector &a, const IntVector &b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Monomial> minimal_by_divisibility(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (const auto &m : ms) {
    bool redundant = false;
    for (const auto &o : ms)
      if (!(o == m) && divides(o.exponents, m.exponents)) redundant = true;
    if (!redundant) out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<IntVector> newton_set(const ToricBundle &bundle, const Polynomial &f, const ChartPoint &x0) {
  bundle.check_point(x0);
  auto zeros = x0.zero_set();
  const auto &duals = bundle.duals(x0.sigma);
  std::vector<IntVector> out;
  for (const auto &m : f) {
    check_monomial(bundle, m);
    IntVector v(bundle.n(), 0);
    for (auto j : zeros)
      for (size_t k = 0; k < v.size(); ++k) v[k] += m.exponents[j] * duals[j][k];
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

bool in_multiplier_ideal(const ToricBundle &bundle, const ChartPoint &x0, const Polynomial &f, const Scalar &t) {
  if (f.empty()) fail(ErrorCode::ZeroFunction, "f is identically zero");
  if (t.sign() <= 0) fail(ErrorCode::InvalidInput, "t must be positive");
  for (const auto &m : f) check_monomial(bundle, m);
  require_big(bundle);
  LogMonomialWeight g = singularity_germ(bundle, x0);
  if (g.trivial()) return true;
  ConvexRegion tp = g.region.scaled(t);
  for (const auto &m : minimal_by_divisibility(f))
    if (!in_interior(tp, shifted(restrict_to(m.exponents, g.coords)))) return false;
  return true;
}

namespace {

IntVector exponent_bound(const LogMonomialWeight &g, const Scalar &t, long extra) {
  size_t k = g.coords.size();
  IntVector out;
  for (size_t i = 0; i < k; ++i) {
    double beta;
    if (k == 1) {
      beta = g.exponents.at(0)[0].value();  // the half-line [mu, inf)
    } else {
      Point e(k, Scalar(0));
      e[i] = Scalar(-1);
      OptResult r = minimize_linear(g.region.base(), e);
      if (!r.bounded()) fail(ErrorCode::UnboundedRegion, "exponent region has an unbounded base");
      beta = -r.value.value();
    }
    out.push_back(static_cast<std::int64_t>(std::floor(t.value() * std::max(beta, 0.0) + 1e-9)) + extra);
  }
  return out;
}

}  // namespace

IntVector default_degree_bound(const ToricBundle &bundle, const ChartPoint &x0, const Scalar &t) {
  LogMonomialWeight g = singularity_germ(bundle, x0);
  return exponent_bound(g, t, 2);
}

std::vector<Monomial> ideal_generators(const ToricBundle &bundle, const ChartPoint &x0, const Scalar &t,
                                       const std::optional<IntVector> &degree_bound) {
  require_big(bundle);
  LogMonomialWeight g = singularity_germ(bundle, x0);
  if (g.trivial()) return {Monomial{IntVector(bundle.n(), 0)}};
  IntVector bound = degree_bound ? *degree_bound : exponent_bound(g, t, 2);
  if (bound.size() != g.coords.size())
    fail(ErrorCode::ArityMismatch, "degree bound needs one entry per vanishing coordinate");
  ConvexRegion tp = g.region.scaled(t);
  std::vector<Monomial> members;
  // q = p + 1 ranges over [1, bound + 1]
  IntVector lo(bound.size(), 1), hi(bound);
  for (auto &h : hi) h += 1;
  for (const auto &q : lattice_points(tp, true, IntBox{lo, hi})) {
    Monomial m{IntVector(bundle.n(), 0)};
    for (size_t i = 0; i < q.size(); ++i) m.exponents[g.coords[i]] = q[i] - 1;
    members.push_back(m);
  }
  return minimal_by_divisibility(members);
}

std::optional<Scalar> monomial_jump(const ToricBundle &bundle, const ChartPoint &x0, const IntVector &q) {
  require_big(bundle);
  LogMonomialWeight g = singularity_germ(bundle, x0);
  if (g.trivial()) return std::nullopt;
  if (q.size() != g.coords.size()) fail(ErrorCode::ArityMismatch, "q needs one entry per vanishing coordinate");
  Scalar s = ray_entry(g.region, to_point(q));
  if (s.sign() <= 0) return std::nullopt;
  return Scalar(1) / s;
}

std::vector<Scalar> JumpingSpectrum::values() const {
  std::vector<Scalar> out;
  for (const auto &j : jumps) out.push_back(j.value);
  return out;
}

JumpingSpectrum jumping_numbers(const ToricBundle &bundle, const ChartPoint &x0, const Scalar &bound) {
  bundle.check_point(x0);
  require_big(bundle);
  JumpingSpectrum spectrum;
  LogMonomialWeight g = singularity_germ(bundle, x0);
  if (g.trivial() || bound.sign() <= 0) return spectrum;
  // A jump t* <= T is always realized by some q with q_j <= T beta_j + 1.
  IntVector hi = exponent_bound(g, bound, 1);
  IntVector lo(hi.size(), 1);
  std::vector<std::pair<Scalar, IntVector>> found;
  IntVector q = lo;
  while (true) {
    Scalar s = ray_entry(g.region, to_point(q));
    if (s.sign() > 0) {
      Scalar t = Scalar(1) / s;
      if (t <= bound) found.emplace_back(t, q);
    }
    size_t i = 0;
    for (; i < q.size(); ++i) {
      if (q[i] < hi[i]) {
        ++q[i];
        break;
      }
      q[i] = lo[i];
    }
    if (i == q.size()) break;
  }
  std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first.value() < b.first.value(); });
  for (auto &[t, pt] : found) {
    if (!spectrum.jumps.empty()) {
      Jump &last = spectrum.jumps.back();
      double scale_ = std::max({1.0, std::fabs(last.value.value()), std::fabs(t.value())});
      if (std::fabs(last.value.value() - t.value()) <= 1e-9 * scale_) {
        last.value = prefer_exact(last.value, t);
        last.points.push_back(pt);
        continue;
      }
    }
    spectrum.jumps.push_back(Jump{t, {pt}});
  }
  for (auto &j : spectrum.jumps) std::sort(j.points.begin(), j.points.end());
  return spectrum;
}

std::optional<Scalar> lct(const ToricBundle &bundle, const ChartPoint &x0) {
  bundle.check_point(x0);
  size_t k = x0.zero_set().size();
  return monomial_jump(bundle, x0, IntVector(k, 1));
}

OpennessResult openness_check(const ToricBundle &bundle, const ChartPoint &x0, const Polynomial &f, const Scalar &t) {
  OpennessResult r;
  r.member = in_multiplier_ideal(bundle, x0, f, t);
  if (!r.member) {
    r.passed = true;
    return r;
  }
  for (double eps : {1e-3, 1e-6}) {
    bool kept = false;
    try {
      kept = in_multiplier_ideal(bundle, x0, f, t * Scalar::approx(1.0 + eps));
    } catch (const MathError &e) {
      if (e.code() != ErrorCode::BoundaryAmbiguous) throw;
    }
    if (kept) r.epsilon = eps;
  }
  r.passed = r.epsilon.has_value();
  return r;
}

SectionCount section_count(const ToricBundle &bundle) {
  SectionCount sc;
  sc.total = Scalar(0);
  const ConvexRegion &nef = bundle.box_nef();
  if (is_empty(nef)) return sc;
  for (const auto &m : lattice_points(nef, false)) {
    SectionCount::Entry e;
    e.m = m;
    e.cls = bundle.class_at(to_point(m));
    if (is_ample(bundle.base(), e.cls)) {
      e.count = section_dimension(bundle.base(), e.cls);
      if (sc.total) sc.total = *sc.total + *e.count;
    } else {
      sc.total.reset();
    }
    sc.per_point.push_back(e);
  }
  return sc;
}

}  // namespace toricmin
