#include "toricmin/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "toricmin/closure.hpp"
#include "toricmin/optimize.hpp"

namespace toricmin {

std::string format_weight(const WeightValue &w) { return w ? w->str() : std::string("-inf"); }

namespace {

// Exact zero stays exact so that unit-modulus points keep exact values.
Scalar approx_or_zero(double v) { return v == 0.0 ? Scalar(0) : Scalar::approx(v); }

bool all_zero(const std::vector<Complex> &z) {
  for (const auto &c : z)
    if (c != Complex(0, 0)) return false;
  return true;
}

AffineForm exponent_form(const ToricBundle &bundle, std::size_t sigma, std::size_t j) {
  // y_j(m) = <m, v_j> - <m_sigma, v_j>
  const IntVector &v = bundle.generators(sigma)[j];
  return AffineForm{to_point(v), Scalar(static_cast<long>(-int_dot(bundle.cartier(sigma), v)))};
}

}  // namespace

struct PsiEvaluator::Slice {
  ConvexRegion region;
  bool empty = false;
  std::unique_ptr<PlanarSolver> solver;
};

PsiEvaluator::PsiEvaluator(const ToricBundle &bundle) : bundle_(bundle) {}
PsiEvaluator::~PsiEvaluator() = default;

const PsiEvaluator::Slice &PsiEvaluator::slice(std::size_t sigma, const std::vector<std::size_t> &zeros) const {
  auto key = std::make_pair(sigma, zeros);
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;
  auto s = std::make_unique<Slice>();
  s->region = bundle_.box_nef();
  for (auto j : zeros) s->region.add_equality(exponent_form(bundle_, sigma, j));
  if (bundle_.n() == 2) {
    s->solver = std::make_unique<PlanarSolver>(s->region);
    s->empty = s->solver->empty();
  } else {
    s->empty = is_empty(s->region);
  }
  return *cache_.emplace(key, std::move(s)).first->second;
}

std::pair<Point, Scalar> PsiEvaluator::objective(const ChartPoint &p) const {
  bundle_.check_point(p);
  size_t n = bundle_.n();
  const auto &gens = bundle_.generators(p.sigma);
  const auto &ms = bundle_.cartier(p.sigma);
  std::vector<double> coef(n, 0.0);
  double constant = 0.0;
  for (size_t j = 0; j < n; ++j) {
    double a = std::abs(p.x[j]);
    if (a == 0.0) continue;
    double l = 2.0 * std::log(a);
    for (size_t k = 0; k < n; ++k) coef[k] += l * static_cast<double>(gens[j][k]);
    constant -= l * static_cast<double>(int_dot(ms, gens[j]));
  }
  Point c(n);
  Scalar c0 = approx_or_zero(constant);
  if (all_zero(p.z)) {
    for (size_t k = 0; k < n; ++k) c[k] = approx_or_zero(coef[k]);
  } else {
    const auto &prob = bundle_.problem();
    for (size_t k = 0; k < n; ++k)
      c[k] = Scalar::approx(coef[k] + evaluate_weight(weight_form(prob.base, prob.L_hom[k]), p.z));
    c0 = Scalar::approx(constant + evaluate_weight(weight_form(prob.base, prob.L0), p.z));
  }
  return {c, c0};
}

WeightValue PsiEvaluator::operator()(const ChartPoint &p) const {
  auto [c, c0] = objective(p);
  const Slice &s = slice(p.sigma, p.zero_set());
  if (s.empty) return std::nullopt;
  OptResult r = s.solver ? s.solver->minimize(scale(Scalar(-1), c)) : minimize_linear(s.region, scale(Scalar(-1), c));
  return c0 - r.value;
}

WeightValue psi_sigma(const ToricBundle &bundle, const ChartPoint &p) { return PsiEvaluator(bundle)(p); }

WeightValue psi_sigma_m(const ToricBundle &bundle, const ChartPoint &p, const Point &m) {
  bundle.check_point(p);
  if (m.size() != bundle.n()) fail(ErrorCode::ArityMismatch, "m needs " + std::to_string(bundle.n()) + " coordinates");
  if (!contains(bundle.box_nef(), m)) fail(ErrorCode::NefViolation, format_point(m) + " is not in box_nef");
  for (auto j : p.zero_set())
    if (!exponent_form(bundle, p.sigma, j)(m).is_zero()) return std::nullopt;
  PsiEvaluator psi(bundle);
  auto [c, c0] = psi.objective(p);
  return dot(c, m) + c0;
}

double glue_check(const PsiEvaluator &psi, const ToricBundle &bundle, const ChartPoint &p, std::size_t other) {
  ChartPoint q = change_chart(bundle, p, other);
  std::vector<double> ell = log_torus_coordinates(bundle, p);
  double expected = 0.0;
  const auto &m0 = bundle.cartier(p.sigma);
  const auto &m1 = bundle.cartier(other);
  for (size_t k = 0; k < ell.size(); ++k) expected += 2.0 * static_cast<double>(m1[k] - m0[k]) * ell[k];
  WeightValue a = psi(p), b = psi(q);
  if (!a || !b) fail(ErrorCode::NotInTorus, "weight is -inf at a torus point");
  return std::fabs(a->value() - b->value() - expected);
}

double glue_check(const ToricBundle &bundle, const ChartPoint &p, std::size_t other) {
  return glue_check(PsiEvaluator(bundle), bundle, p, other);
}

LogMonomialWeight LogMonomialWeight::from_exponents(std::vector<std::size_t> coords, const std::vector<Point> &alphas) {
  LogMonomialWeight g;
  g.coords = std::move(coords);
  if (g.coords.empty()) return g;
  auto basis = standard_basis(g.coords.size());
  g.region = hull_plus_cone(alphas, basis);
  g.exponents = minimal_generators(alphas, basis);
  return g;
}

LogMonomialWeight LogMonomialWeight::scaled(const Scalar &s) const {
  LogMonomialWeight g = *this;
  if (trivial()) return g;
  g.region = region.scaled(s);
  for (auto &e : g.exponents) e = toricmin::scale(s, e);
  return g;
}

LogMonomialWeight singularity_germ(const ToricBundle &bundle, const ChartPoint &x0) {
  bundle.check_point(x0);
  LogMonomialWeight g;
  g.coords = x0.zero_set();
  size_t k = g.coords.size();
  if (k == 0) return g;
  ConvexRegion s = bundle.to_exponent(bundle.box_nef(), x0.sigma);
  if (k == bundle.n()) {
    g.region = s.with_recession(standard_basis(k));
    if (k == 2 && g.region.is_polyhedral()) {
      auto corners = PlanarSolver(s).corners();
      g.exponents = minimal_generators(corners, standard_basis(2));
      std::sort(g.exponents.begin(), g.exponents.end(),
                [](const Point &a, const Point &b) { return a[0] < b[0]; });
    }
    return g;
  }
  if (k == 1) {
    Point e(bundle.n(), Scalar(0));
    e[g.coords[0]] = Scalar(1);
    Scalar mu = minimize_linear(s, e).value;
    g.region = ConvexRegion(1);
    g.region.add_inequality(AffineForm{Point{Scalar(1)}, -mu});
    g.region = g.region.with_recession(standard_basis(1));
    g.exponents = {Point{mu}};
    return g;
  }
  fail(ErrorCode::UnsupportedDimension, "germs with more than one but not all coordinates vanishing need n = 2");
}

const char *order_name(SingularityOrder o) {
  switch (o) {
    case SingularityOrder::Less: return "Less";
    case SingularityOrder::Greater: return "Greater";
    case SingularityOrder::Equivalent: return "Equivalent";
    case SingularityOrder::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

namespace {

Scalar support(const LogMonomialWeight &g, const Point &w) {
  if (g.trivial()) return Scalar(0);
  return minimize_linear(g.region, w).value;
}

std::vector<Point> corners_of(const LogMonomialWeight &g) {
  if (g.trivial()) return {Point{Scalar(0), Scalar(0)}};
  return PlanarSolver(g.region.base().linearized()).corners();
}

}  // namespace

SingularityOrder compare_singularity(const LogMonomialWeight &g1, const LogMonomialWeight &g2) {
  size_t k = std::max(g1.coords.size(), g2.coords.size());
  if (!g1.trivial() && !g2.trivial() && g1.coords != g2.coords)
    fail(ErrorCode::ArityMismatch, "germs live on different coordinate sets");
  std::vector<Point> dirs;
  if (k == 0) return SingularityOrder::Equivalent;
  if (k == 1) {
    dirs.push_back(Point{Scalar(1)});
  } else if (k == 2) {
    // Support functions of polygons break only at normals of vertex pairs.
    std::vector<Point> pts = corners_of(g1);
    for (const auto &p : corners_of(g2)) pts.push_back(p);
    dirs.push_back(Point{Scalar(1), Scalar(0)});
    dirs.push_back(Point{Scalar(0), Scalar(1)});
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        Point d = sub(pts[j], pts[i]);
        Point nrm{d[1], -d[0]};
        if (nrm[0].sign() < 0 || (nrm[0].is_zero() && nrm[1].sign() < 0)) nrm = scale(Scalar(-1), nrm);
        if (nrm[0].sign() >= 0 && nrm[1].sign() >= 0 && !(nrm[0].is_zero() && nrm[1].is_zero())) dirs.push_back(nrm);
      }
    bool curved = (!g1.trivial() && !g1.region.is_polyhedral()) || (!g2.trivial() && !g2.region.is_polyhedral());
    if (curved) {
      const int steps = 512;
      for (int i = 1; i < steps; ++i) {
        double s = static_cast<double>(i) / steps;
        dirs.push_back(Point{Scalar::approx(1.0 - s), Scalar::approx(s)});
      }
    }
  } else {
    fail(ErrorCode::UnsupportedDimension, "germ comparison supports at most two coordinates");
  }
  bool h1_ge = true, h2_ge = true;
  for (const auto &w : dirs) {
    int c = compare(support(g1, w), support(g2, w));
    if (c < 0) h1_ge = false;
    if (c > 0) h2_ge = false;
  }
  if (h1_ge && h2_ge) return SingularityOrder::Equivalent;
  if (h1_ge) return SingularityOrder::Less;
  if (h2_ge) return SingularityOrder::Greater;
  return SingularityOrder::Incomparable;
}

SectionEnvelope::SectionEnvelope(const ToricBundle &bundle, long nu) : bundle_(bundle), nu_(nu) {
  if (nu <= 0) fail(ErrorCode::InvalidInput, "nu must be positive");
  if (bundle.n() != 2) fail(ErrorCode::UnsupportedDimension, "section envelope needs fiber rank 2");
  const ConvexRegion &nef = bundle.box_nef();
  const PlanarSolver &solver = bundle.box_nef_solver();
  if (solver.empty()) fail(ErrorCode::NoSections, "box_nef is empty");
  double lo2 = solver.minimize(Point{Scalar(0), Scalar(1)}).value.value();
  double hi2 = -solver.minimize(Point{Scalar(0), Scalar(-1)}).value.value();
  long k0 = static_cast<long>(std::ceil(lo2 * nu - 1e-6)) - 1;
  long k1 = static_cast<long>(std::floor(hi2 * nu + 1e-6)) + 1;
  for (long k = k0; k <= k1; ++k) {
    Scalar m2 = Scalar::ratio(k, nu);
    ConvexRegion row = nef;
    row.add_equality(AffineForm{Point{Scalar(0), Scalar(1)}, -m2});
    PlanarSolver rs(row);
    if (rs.empty()) continue;
    double a = rs.minimize(Point{Scalar(1), Scalar(0)}).witness[0].value();
    double b = rs.minimize(Point{Scalar(-1), Scalar(0)}).witness[0].value();
    auto inside = [&](long c) { return contains(nef, Point{Scalar::ratio(c, nu), m2}); };
    // Lattice points of a row are contiguous; start from the approximate
    // ends and walk to the exact ones. The row may hold none at all.
    long lo = static_cast<long>(std::ceil(a * nu - 1e-6)) - 1, hi = static_cast<long>(std::floor(b * nu + 1e-6)) + 1;
    long L = lo;
    while (L <= hi && !inside(L)) ++L;
    if (L > hi) continue;
    while (inside(L - 1)) --L;
    long H = hi;
    while (!inside(H)) --H;
    while (inside(H + 1)) ++H;
    if (L <= H) rows_.push_back(Row{k, L, H});
  }
  if (rows_.empty()) fail(ErrorCode::NoSections, "nu * box_nef contains no lattice point");
}

std::size_t SectionEnvelope::lattice_point_count() const {
  std::size_t n = 0;
  for (const auto &r : rows_) n += static_cast<std::size_t>(r.hi - r.lo + 1);
  return n;
}

Scalar SectionEnvelope::operator()(const PsiEvaluator &psi, const ChartPoint &p) const {
  auto [c, c0] = psi.objective(p);
  auto zeros = p.zero_set();
  std::optional<Scalar> best;
  auto consider = [&](long m1, long m2) {
    Point m{Scalar::ratio(m1, nu_), Scalar::ratio(m2, nu_)};
    for (auto j : zeros)
      if (!exponent_form(bundle_, p.sigma, j)(m).is_zero()) return;
    Scalar v = dot(c, m) + c0;
    if (!best || v > *best) best = v;
  };
  for (const auto &r : rows_) {
    if (zeros.empty()) {
      consider(r.lo, r.m2);
      consider(r.hi, r.m2);
    } else {
      for (long m1 = r.lo; m1 <= r.hi; ++m1) consider(m1, r.m2);
    }
  }
  if (!best) fail(ErrorCode::NoSections, "no section of L^nu is nonzero at the point");
  return *best;
}

Scalar section_envelope_oracle(const ToricBundle &bundle, long nu, const ChartPoint &p) {
  PsiEvaluator psi(bundle);
  return SectionEnvelope(bundle, nu)(psi, p);
}

}  // namespace toricmin
