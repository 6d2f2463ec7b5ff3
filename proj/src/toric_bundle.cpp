#include "toricmin/toric_bundle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "toricmin/boundary.hpp"
#include "toricmin/optimize.hpp"

namespace toricmin {

Cone Fan::cone(std::size_t id) const {
  if (id >= max_cones.size()) fail(ErrorCode::UnknownCone, "no maximal cone with id " + std::to_string(id));
  Cone c;
  for (auto r : max_cones[id]) c.generators.push_back(rays.at(r));
  return c;
}

std::vector<std::size_t> ChartPoint::zero_set() const {
  std::vector<std::size_t> out;
  for (size_t j = 0; j < x.size(); ++j)
    if (x[j] == Complex(0, 0)) out.push_back(j);
  return out;
}

namespace {

bool same_classes(const std::vector<NSClass> &a, const std::vector<NSClass> &b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!a[i][j].identical(b[i][j])) return false;
  }
  return true;
}

bool same_points(const std::map<std::string, ChartPoint> &a, const std::map<std::string, ChartPoint> &b) {
  if (a.size() != b.size()) return false;
  for (const auto &[k, p] : a) {
    auto it = b.find(k);
    if (it == b.end()) return false;
    if (it->second.sigma != p.sigma || it->second.x != p.x || it->second.z != p.z) return false;
  }
  return true;
}

double angle_of(const IntVector &v) { return std::atan2(static_cast<double>(v[1]), static_cast<double>(v[0])); }

std::int64_t det2(const IntVector &a, const IntVector &b) { return a[0] * b[1] - a[1] * b[0]; }

bool is_integer(const Scalar &s) { return s.is_exact() && s.exact().get_den() == 1; }

}  // namespace

bool operator==(const BundleProblem &a, const BundleProblem &b) {
  return a.base == b.base && a.fan == b.fan && same_classes(a.L_hom, b.L_hom) &&
         same_classes({a.L0}, {b.L0}) && same_classes({a.h}, {b.h}) && a.assume_projective == b.assume_projective &&
         same_points(a.points, b.points);
}

bool ValidationReport::ok() const {
  for (const auto &i : issues)
    if (!i.warning) return false;
  return true;
}

ValidationReport validate(const BundleProblem &p) {
  ValidationReport rep;
  auto issue = [&](ErrorCode c, const std::string &m, bool warn = false) { rep.issues.push_back({c, m, warn}); };
  const Fan &fan = p.fan;
  size_t n = fan.dim();
  if (fan.rays.empty() || n == 0) {
    issue(ErrorCode::InvalidInput, "fan has no rays");
    return rep;
  }
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    const auto &r = fan.rays[i];
    if (r.size() != n) {
      issue(ErrorCode::ArityMismatch, "ray " + std::to_string(i) + " has the wrong length");
      return rep;
    }
    if (gcd_of(r) != 1) issue(ErrorCode::NonPrimitiveRay, "ray " + std::to_string(i) + " " + format_int_vector(r) + " is not primitive");
  }
  bool cones_ok = true;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto &idx = fan.max_cones[c];
    bool bad_index = false;
    for (auto i : idx)
      if (i >= fan.rays.size()) bad_index = true;
    if (bad_index) {
      issue(ErrorCode::InvalidInput, "cone " + std::to_string(c) + " refers to a missing ray");
      cones_ok = false;
      continue;
    }
    if (idx.size() != n) {
      issue(ErrorCode::NonSmoothCone, "cone " + std::to_string(c) + " is not full-dimensional simplicial");
      cones_ok = false;
      continue;
    }
    Cone cone = fan.cone(c);
    if (!cone.is_smooth()) {
      issue(ErrorCode::NonSmoothCone, "cone " + std::to_string(c) + " has |det| = " +
                                          std::to_string(std::llabs(int_determinant(cone.generator_matrix()))));
      cones_ok = false;
    }
  }
  if (fan.max_cones.empty()) issue(ErrorCode::IncompleteFan, "fan has no maximal cones");
  if (cones_ok && !fan.max_cones.empty()) {
    if (n == 1) {
      std::set<std::int64_t> dirs;
      for (const auto &c : fan.max_cones) dirs.insert(fan.rays[c[0]][0]);
      if (dirs != std::set<std::int64_t>{-1, 1}) issue(ErrorCode::IncompleteFan, "rank one fan must have cones at +1 and -1");
    } else if (n == 2) {
      std::vector<size_t> order(fan.rays.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return angle_of(fan.rays[a]) < angle_of(fan.rays[b]); });
      std::set<std::set<size_t>> expected, given;
      for (size_t i = 0; i < order.size(); ++i) {
        size_t a = order[i], b = order[(i + 1) % order.size()];
        if (det2(fan.rays[a], fan.rays[b]) > 0) expected.insert({a, b});
      }
      for (const auto &c : fan.max_cones) given.insert({c[0], c[1]});
      if (order.size() < 3 || expected.size() != order.size() || given != expected)
        issue(ErrorCode::IncompleteFan, "maximal cones do not cover the plane by consecutive rays");
    } else if (!p.assume_projective) {
      issue(ErrorCode::IncompleteFan, "completeness of rank " + std::to_string(n) +
                                          " fans is not checked; set assume_projective to proceed");
    } else {
      issue(ErrorCode::NotProjective, "projectivity assumed, not verified", true);
    }
  }

  size_t rank = p.base.ns_rank();
  if (p.base.kind == TorusBase::Kind::Hermitian) {
    for (size_t k = 0; k < p.base.basis_forms.size(); ++k) {
      const auto &h = p.base.basis_forms[k];
      bool ok = h.dim() == p.base.d && h.im.size() == p.base.d;
      for (size_t i = 0; ok && i < h.dim(); ++i)
        for (size_t j = 0; ok && j < h.dim(); ++j)
          if (compare(h.re[i][j], h.re[j][i]) != 0 || compare(h.im[i][j], -h.im[j][i]) != 0) ok = false;
      if (!ok) issue(ErrorCode::InvalidInput, "basis form " + std::to_string(k) + " is not a hermitian matrix");
    }
  }
  if (p.L_hom.size() != n)
    issue(ErrorCode::ArityMismatch, "L_hom has " + std::to_string(p.L_hom.size()) + " classes, fiber rank is " + std::to_string(n));
  for (size_t k = 0; k < p.L_hom.size(); ++k)
    if (p.L_hom[k].size() != rank) issue(ErrorCode::ArityMismatch, "L_hom[" + std::to_string(k) + "] has the wrong length");
  if (p.L0.size() != rank) issue(ErrorCode::ArityMismatch, "L0 has the wrong length");
  if (p.h.size() != fan.rays.size()) {
    issue(ErrorCode::PLInconsistent, "h needs one value per ray");
  } else {
    for (size_t i = 0; i < p.h.size(); ++i)
      if (!is_integer(p.h[i])) issue(ErrorCode::NotCartier, "h(v" + std::to_string(i) + ") is not an integer");
  }
  for (const auto &[name, pt] : p.points) {
    if (pt.sigma >= fan.max_cones.size()) issue(ErrorCode::UnknownCone, "point " + name + " uses a missing chart");
    if (pt.x.size() != n || pt.z.size() != p.base.d) issue(ErrorCode::ArityMismatch, "point " + name + " has the wrong arity");
  }
  return rep;
}

std::map<std::size_t, IntVector> cartier_data(const Fan &fan, const std::vector<Scalar> &h) {
  std::map<std::size_t, IntVector> out;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto duals = dual_basis(fan.cone(c));
    IntVector m(fan.dim(), 0);
    for (size_t j = 0; j < duals.size(); ++j) {
      const Scalar &hv = h.at(fan.max_cones[c][j]);
      if (!is_integer(hv)) fail(ErrorCode::NotCartier, "h is not integral");
      std::int64_t v = hv.exact().get_num().get_si();
      for (size_t k = 0; k < m.size(); ++k) m[k] += v * duals[j][k];
    }
    out[c] = m;
  }
  return out;
}

ConvexRegion box_h(const Fan &fan, const std::vector<Scalar> &h) {
  ConvexRegion r(fan.dim());
  for (size_t i = 0; i < fan.rays.size(); ++i) r.add_inequality(AffineForm{to_point(fan.rays[i]), -h.at(i)});
  return r;
}

ToricBundle::ToricBundle(BundleProblem problem) : problem_(std::move(problem)) {
  ValidationReport rep = validate(problem_);
  for (const auto &i : rep.issues)
    if (!i.warning) fail(i.code, i.message);
  auto cd = cartier_data(problem_.fan, problem_.h);
  for (size_t c = 0; c < cone_count(); ++c) {
    Cone cone = problem_.fan.cone(c);
    gens_.push_back(cone.generators);
    duals_.push_back(dual_basis(cone));
    cartier_.push_back(cd[c]);
  }
  box_h_ = toricmin::box_h(problem_.fan, problem_.h);
}

ToricBundle::~ToricBundle() = default;

std::size_t ToricBundle::check(std::size_t id) const {
  if (id >= cone_count()) fail(ErrorCode::UnknownCone, "no maximal cone with id " + std::to_string(id));
  return id;
}

Cone ToricBundle::cone(std::size_t id) const { return problem_.fan.cone(check(id)); }

NSClass ToricBundle::class_at(const Point &m) const {
  NSClass c = problem_.L0;
  for (size_t k = 0; k < m.size(); ++k)
    for (size_t i = 0; i < c.size(); ++i) c[i] += m[k] * problem_.L_hom[k][i];
  return c;
}

HermitianMatrix ToricBundle::form_at(const Point &m) const { return weight_form(base(), class_at(m)); }

const ConvexRegion &ToricBundle::box_nef() const {
  if (!box_nef_) {
    const TorusBase &b = base();
    if (b.d != 2) fail(ErrorCode::UnsupportedDimension, "box_nef needs a base torus of dimension 2");
    std::vector<HermitianMatrix> hk;
    for (const auto &cls : problem_.L_hom) hk.push_back(weight_form(b, cls));
    ConvexRegion r = box_h_;
    r.add_cone_constraint(psd_cone_constraint(weight_form(b, problem_.L0), hk));
    box_nef_ = r.linearized();
  }
  return *box_nef_;
}

const PlanarSolver &ToricBundle::box_nef_solver() const {
  if (!box_nef_solver_) {
    if (n() != 2) fail(ErrorCode::UnsupportedDimension, "planar solver needs fiber rank 2");
    box_nef_solver_ = std::make_unique<PlanarSolver>(box_nef());
  }
  return *box_nef_solver_;
}

ConvexRegion ToricBundle::to_exponent(const ConvexRegion &region_in_m, std::size_t id) const {
  // m = sum_j y_j v^j + m_sigma
  const auto &duals = this->duals(id);
  size_t n = this->n();
  Matrix t(n, Point(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) t[i][j] = Scalar(static_cast<long>(duals[j][i]));
  return region_in_m.preimage(t, to_point(cartier(id)));
}

Point ToricBundle::exponent_of(const Point &m, std::size_t id) const {
  Point d = sub(m, to_point(cartier(id)));
  Point y;
  for (const auto &v : generators(id)) y.push_back(dot(d, to_point(v)));
  return y;
}

Point ToricBundle::from_exponent(const Point &y, std::size_t id) const {
  Point m = to_point(cartier(id));
  const auto &duals = this->duals(id);
  for (size_t j = 0; j < y.size(); ++j) m = add(m, scale(y[j], to_point(duals[j])));
  return m;
}

ChartPoint ToricBundle::named_point(const std::string &name) const {
  auto it = problem_.points.find(name);
  if (it == problem_.points.end()) fail(ErrorCode::UnknownPoint, "no point named " + name);
  return it->second;
}

void ToricBundle::check_point(const ChartPoint &p) const {
  check(p.sigma);
  if (p.x.size() != n()) fail(ErrorCode::ArityMismatch, "chart point needs " + std::to_string(n()) + " x-coordinates");
  if (p.z.size() != base().d) fail(ErrorCode::ArityMismatch, "chart point needs " + std::to_string(base().d) + " z-coordinates");
}

ConvexRegion box_nef(const ToricBundle &bundle) { return bundle.box_nef(); }

bool is_pseudoeffective(const ToricBundle &bundle) { return !is_empty(bundle.box_nef()); }

const char *bigness_name(Bigness b) {
  switch (b) {
    case Bigness::Big: return "Big";
    case Bigness::NotBig: return "NotBig";
    case Bigness::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// The fan of P^2 up to a lattice automorphism: three rays summing to 0.
bool is_projective_plane_fan(const Fan &fan) {
  if (fan.dim() != 2 || fan.rays.size() != 3 || fan.max_cones.size() != 3) return false;
  IntVector s(2, 0);
  for (const auto &r : fan.rays)
    for (size_t i = 0; i < 2; ++i) s[i] += r[i];
  return s[0] == 0 && s[1] == 0;
}

}  // namespace

Bigness is_big(const ToricBundle &bundle) {
  if (bundle.n() != 2) return Bigness::Unknown;
  const ConvexRegion &nef = bundle.box_nef();
  if (is_empty(nef)) return Bigness::NotBig;
  PlanarBoundary b = trace_boundary(nef);
  // Full-dimensional iff the averaged center is strictly inside.
  if (classify_point(nef, b.center) != Containment::Interior &&
      classify_point(nef.base(), b.center) != Containment::Ambiguous) {
    // Averages of boundary points of a full-dimensional convex set with at
    // least three affinely independent members are interior.
    return Bigness::NotBig;
  }
  // Look for an ample class in the interior of box_h: the center, the
  // midpoints towards the corners, and a grid.
  std::vector<Point> probes{b.center};
  for (const auto &c : b.corners) probes.push_back(scale(Scalar::ratio(1, 2), add(c, b.center)));
  double lo[2], hi[2];
  for (int i = 0; i < 2; ++i) {
    Point e(2, Scalar(0));
    e[i] = Scalar(1);
    lo[i] = minimize_linear(nef, e).value.value();
    hi[i] = maximize_linear(nef, e).value.value();
  }
  const int k = 24;
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j)
      probes.push_back(Point{Scalar::approx(lo[0] + (hi[0] - lo[0]) * i / k), Scalar::approx(lo[1] + (hi[1] - lo[1]) * j / k)});
  for (const auto &p : probes) {
    if (classify_point(bundle.box_h(), p) != Containment::Interior) continue;
    if (is_ample(bundle.base(), bundle.class_at(p))) return Bigness::Big;
  }
  return is_projective_plane_fan(bundle.problem().fan) ? Bigness::NotBig : Bigness::Unknown;
}

IntVector section_exponents(const ToricBundle &bundle, std::size_t sigma, const IntVector &m) {
  IntVector d(m);
  const auto &ms = bundle.cartier(sigma);
  for (size_t k = 0; k < d.size(); ++k) d[k] -= ms[k];
  IntVector out;
  for (const auto &v : bundle.generators(sigma)) out.push_back(int_dot(d, v));
  return out;
}

std::vector<double> log_torus_coordinates(const ToricBundle &bundle, const ChartPoint &p) {
  bundle.check_point(p);
  size_t n = bundle.n();
  std::vector<double> ell(n, 0.0);
  const auto &gens = bundle.generators(p.sigma);
  for (size_t j = 0; j < n; ++j) {
    double a = std::abs(p.x[j]);
    if (a == 0.0) fail(ErrorCode::NotInTorus, "point has a zero fiber coordinate");
    double l = std::log(a);
    for (size_t k = 0; k < n; ++k) ell[k] += l * static_cast<double>(gens[j][k]);
  }
  return ell;
}

ChartPoint change_chart(const ToricBundle &bundle, const ChartPoint &p, std::size_t target) {
  bundle.check_point(p);
  size_t n = bundle.n();
  for (const auto &x : p.x)
    if (x == Complex(0, 0)) fail(ErrorCode::NotInTorus, "change_chart needs all x_j != 0");
  ChartPoint q{target, std::vector<Complex>(n, Complex(1, 0)), p.z};
  const auto &gens = bundle.generators(p.sigma);
  const auto &duals = bundle.duals(target);
  // x'_i = prod_j x_j^{<v'^i, v_j>}
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto e = int_dot(duals[i], gens[j]);
      if (e == 0) continue;
      Complex base = e > 0 ? p.x[j] : Complex(1, 0) / p.x[j];
      for (std::int64_t r = 0; r < std::llabs(e); ++r) q.x[i] *= base;
    }
  return q;
}

std::size_t locate_cone(const ToricBundle &bundle, const ChartPoint &p) {
  std::vector<double> ell = log_torus_coordinates(bundle, p);
  double scale_ = 1.0;
  for (double v : ell) scale_ = std::max(scale_, std::fabs(v));
  size_t best = 0;
  double best_min = -INFINITY;
  for (size_t c = 0; c < bundle.cone_count(); ++c) {
    double mn = INFINITY;
    for (const auto &d : bundle.duals(c)) {
      double s = 0;
      for (size_t k = 0; k < ell.size(); ++k) s -= static_cast<double>(d[k]) * ell[k];  // <v^j, w0>, w0 = -ell
      mn = std::min(mn, s);
    }
    if (mn >= -1e-12 * scale_) return c;
    if (mn > best_min) {
      best_min = mn;
      best = c;
    }
  }
  return best;
}

namespace {

// Lattice point p of Cone(a, b) (det(a,b) = d > 1) with det(a, p) = 1; the
// first ray of the Hirzebruch-Jung resolution next to a.
IntVector hj_ray(const IntVector &a, const IntVector &b) {
  std::int64_t d = det2(a, b);
  // extended gcd: a0 x + a1 y = 1
  std::int64_t old_r = a[0], r = a[1], old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  IntVector p0{-old_t, old_s};  // det(a, p0) = a0 x + a1 y = 1
  std::int64_t c = det2(p0, b);
  // choose k with 0 < (c + k d)/d < 1
  std::int64_t k = -(c >= 0 ? c / d : -((-c + d - 1) / d));
  return IntVector{p0[0] + k * a[0], p0[1] + k * a[1]};
}

}  // namespace

Fan subdivide(const Fan &fan, const std::vector<IntVector> &hyperplane_normals) {
  if (fan.dim() != 2) fail(ErrorCode::UnsupportedDimension, "subdivide supports fiber rank 2 only");
  std::vector<IntVector> rays = fan.rays;
  auto has_ray = [&](const IntVector &r) { return std::find(rays.begin(), rays.end(), r) != rays.end(); };
  for (const auto &u : hyperplane_normals) {
    IntVector r = primitive(IntVector{-u[1], u[0]});
    if (r[0] == 0 && r[1] == 0) continue;
    for (const IntVector &cand : {r, IntVector{-r[0], -r[1]}})
      if (!has_ray(cand)) rays.push_back(cand);
  }
  std::vector<size_t> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return angle_of(rays[a]) < angle_of(rays[b]); });

  // Cyclic list of ray indices; insert Hirzebruch-Jung rays until smooth.
  std::vector<size_t> cyc = order;
  for (size_t i = 0; i < cyc.size();) {
    const IntVector &a = rays[cyc[i]];
    const IntVector &b = rays[cyc[(i + 1) % cyc.size()]];
    std::int64_t d = det2(a, b);
    if (d <= 0) fail(ErrorCode::IncompleteFan, "consecutive rays do not span a strictly convex cone");
    if (d == 1) {
      ++i;
      continue;
    }
    IntVector p = hj_ray(a, b);
    rays.push_back(p);
    cyc.insert(cyc.begin() + static_cast<long>(i) + 1, rays.size() - 1);
  }
  Fan out;
  out.rays = rays;
  for (size_t i = 0; i < cyc.size(); ++i) out.max_cones.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
  return out;
}

IntMatrix pullback_matrix(const Cone &sigma, const Cone &sigma_tilde) {
  auto duals = dual_basis(sigma);
  size_t n = duals.size();
  IntMatrix p(n, IntVector(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      p[j][k] = int_dot(duals[j], sigma_tilde.generators[k]);
      if (p[j][k] < 0) fail(ErrorCode::InvalidInput, "refined cone is not contained in the coarse cone");
    }
  return p;
}

}  // namespace toricmin
