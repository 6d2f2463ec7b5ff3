#include "toricmin/optimize.hpp"

#include <cmath>

#include "toricmin/errors.hpp"
#include "toricmin/lp.hpp"

namespace toricmin {

namespace {

// Half-width of the artificial box used to detect unboundedness in the plane.
const long kBox = 1000000;

int lex_compare(const Point &a, const Point &b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool same_point(const Point &a, const Point &b) { return lex_compare(a, b) == 0; }

Point xy(const Scalar &x, const Scalar &y) { return Point{x, y}; }

}  // namespace

PlanarSolver::PlanarSolver(const ConvexRegion &base) {
  if (base.dim() != 2) fail(ErrorCode::UnsupportedDimension, "planar solver needs dimension 2");
  region_ = base.base().linearized();
  if (region_.cone_constraints().size() > 1)
    fail(ErrorCode::UnsupportedDimension, "more than one second-order cone constraint");

  for (const auto &f : region_.inequalities()) {
    if (f.is_constant()) {
      if (f.constant.sign() < 0) empty_ = true;
      continue;
    }
    lines_.push_back(f);
  }
  edges_ = lines_;
  box_first_ = lines_.size();
  for (int i = 0; i < 2; ++i) {
    Point e(2, Scalar(0));
    e[i] = Scalar(1);
    lines_.push_back(AffineForm{e, Scalar(kBox)});
    lines_.push_back(AffineForm{scale(Scalar(-1), e), Scalar(kBox)});
  }
  if (empty_) return;

  std::vector<AffineForm> all_lines = lines_;
  std::vector<Point> cands;

  if (!region_.cone_constraints().empty()) {
    const ConeConstraint &soc = region_.cone_constraints()[0];
    Conic c{soc, 0, 0, 0, 0, 0, 0};
    const Point &b = soc.bound.coef;
    const Scalar &b0 = soc.bound.constant;
    c.q11 = b[0] * b[0];
    c.q12 = b[0] * b[1];
    c.q22 = b[1] * b[1];
    c.p1 = b0 * b[0];
    c.p2 = b0 * b[1];
    c.r = b0 * b0;
    for (const auto &a : soc.components) {
      c.q11 -= a.coef[0] * a.coef[0];
      c.q12 -= a.coef[0] * a.coef[1];
      c.q22 -= a.coef[1] * a.coef[1];
      c.p1 -= a.constant * a.coef[0];
      c.p2 -= a.constant * a.coef[1];
      c.r -= a.constant * a.constant;
    }
    Matrix m3 = {{c.q11, c.q12, c.p1}, {c.q12, c.q22, c.p2}, {c.p1, c.p2, c.r}};
    c.degenerate = determinant(m3).is_zero();
    conic_ = c;

    if (c.degenerate) {
      std::vector<AffineForm> conic_lines;
      Scalar det_q = c.q11 * c.q22 - c.q12 * c.q12;
      if (!det_q.is_zero()) {
        Point apex = *solve(Matrix{{c.q11, c.q12}, {c.q12, c.q22}}, Point{-c.p1, -c.p2});
        cands.push_back(apex);
        if (det_q.sign() < 0) {
          std::vector<Point> dirs;
          if (!c.q11.is_zero()) {
            Scalar s = sqrt(c.q12 * c.q12 - c.q11 * c.q22);
            dirs.push_back(xy((-c.q12 + s) / c.q11, Scalar(1)));
            dirs.push_back(xy((-c.q12 - s) / c.q11, Scalar(1)));
          } else {
            dirs.push_back(xy(Scalar(1), Scalar(0)));
            dirs.push_back(xy(-c.q22, Scalar(2) * c.q12));
          }
          for (const auto &d : dirs) {
            Point n = xy(-d[1], d[0]);
            conic_lines.push_back(AffineForm{n, -dot(n, apex)});
          }
        }
      } else {
        bool zero_q = c.q11.is_zero() && c.q12.is_zero() && c.q22.is_zero();
        if (zero_q) {
          conic_lines.push_back(AffineForm{xy(c.p1, c.p2), c.r / Scalar(2)});
        } else {
          Point k = c.q11.is_zero() ? xy(c.q12, c.q22) : xy(c.q11, c.q12);
          Scalar lambda = Scalar(1) / (c.q11.is_zero() ? c.q22 : c.q11);
          Scalar mu = (c.p1 * k[0] + c.p2 * k[1]) / dot(k, k);
          Scalar disc = mu * mu - lambda * c.r;
          if (disc.sign() >= 0) {
            Scalar s = sqrt(max(disc, Scalar(0)));
            for (const Scalar &u : {(-mu + s) / lambda, (-mu - s) / lambda})
              conic_lines.push_back(AffineForm{k, -u});
          }
        }
      }
      for (const auto &l : conic_lines) {
        if (l.is_constant()) continue;
        edges_.push_back(l);
        all_lines.push_back(l);
      }
    } else {
      for (const auto &l : lines_) add_line_conic(l, cands);
    }
  }

  for (size_t i = 0; i < all_lines.size(); ++i) {
    for (size_t j = i + 1; j < all_lines.size(); ++j) {
      const auto &a = all_lines[i], &b = all_lines[j];
      Scalar det = a.coef[0] * b.coef[1] - a.coef[1] * b.coef[0];
      if (det.is_zero()) continue;
      // Cramer on a.x = -a0, b.x = -b0
      Scalar x = (-a.constant * b.coef[1] + b.constant * a.coef[1]) / det;
      Scalar y = (-a.coef[0] * b.constant + b.coef[0] * a.constant) / det;
      cands.push_back(xy(x, y));
    }
  }
  for (auto &p : cands)
    if (feasible(p)) static_.push_back(p);

  if (static_.empty()) {
    std::vector<Point> probe;
    tangency(xy(Scalar(1), Scalar(0)), probe);
    tangency(xy(Scalar(0), Scalar(1)), probe);
    empty_ = probe.empty();
  }
}

Scalar PlanarSolver::conic_value(const Point &x) const {
  const Conic &c = *conic_;
  return c.q11 * x[0] * x[0] + Scalar(2) * c.q12 * x[0] * x[1] + c.q22 * x[1] * x[1] +
         Scalar(2) * (c.p1 * x[0] + c.p2 * x[1]) + c.r;
}

void PlanarSolver::intersect_param_line(const Point &x0, const Point &d, std::vector<Point> &out) const {
  const Conic &c = *conic_;
  Scalar a = c.q11 * d[0] * d[0] + Scalar(2) * c.q12 * d[0] * d[1] + c.q22 * d[1] * d[1];
  Scalar qx0_1 = c.q11 * x0[0] + c.q12 * x0[1] + c.p1;
  Scalar qx0_2 = c.q12 * x0[0] + c.q22 * x0[1] + c.p2;
  Scalar b = Scalar(2) * (d[0] * qx0_1 + d[1] * qx0_2);
  Scalar cc = conic_value(x0);
  std::vector<Scalar> ts;
  if (a.is_zero()) {
    if (!b.is_zero()) ts.push_back(-cc / b);
  } else {
    Scalar disc = b * b - Scalar(4) * a * cc;
    int s = disc.sign();
    if (s == 0) {
      ts.push_back(-b / (Scalar(2) * a));
    } else if (s > 0) {
      Scalar root = sqrt(disc);
      ts.push_back((-b + root) / (Scalar(2) * a));
      ts.push_back((-b - root) / (Scalar(2) * a));
    }
  }
  for (const auto &t : ts) out.push_back(add(x0, scale(t, d)));
}

void PlanarSolver::add_line_conic(const AffineForm &line, std::vector<Point> &out) const {
  const Point &a = line.coef;
  Scalar nn = dot(a, a);
  if (nn.is_zero()) return;
  Point x0 = scale(-line.constant / nn, a);
  Point d = xy(-a[1], a[0]);
  intersect_param_line(x0, d, out);
}

void PlanarSolver::tangency(const Point &w, std::vector<Point> &out) const {
  if (!conic_ || conic_->degenerate) return;
  const Conic &c = *conic_;
  Point wp = xy(-w[1], w[0]);
  Point n = xy(c.q11 * wp[0] + c.q12 * wp[1], c.q12 * wp[0] + c.q22 * wp[1]);
  if (n[0].is_zero() && n[1].is_zero()) return;
  std::vector<Point> pts;
  add_line_conic(AffineForm{n, c.p1 * wp[0] + c.p2 * wp[1]}, pts);
  for (auto &p : pts)
    if (feasible(p)) out.push_back(p);
}

bool PlanarSolver::feasible(const Point &x) const {
  for (const auto &f : lines_)
    if (f(x).sign() < 0) return false;
  if (!conic_) return true;
  const ConeConstraint &soc = conic_->soc;
  if (soc.is_exact() && is_exact(x)) {
    Scalar b = soc.bound(x);
    if (b.sign() < 0) return false;
    Scalar sq(0);
    for (const auto &comp : soc.components) {
      Scalar v = comp(x);
      sq += v * v;
    }
    return compare(b * b, sq) >= 0;
  }
  return soc.slack(x).sign() >= 0;
}

OptResult PlanarSolver::pick(const std::vector<Point> &cands, const Point &w) const {
  if (cands.empty()) fail(ErrorCode::EmptyRegion, "region is empty");
  size_t best = 0;
  Scalar best_val = dot(w, cands[0]);
  for (size_t i = 1; i < cands.size(); ++i) {
    Scalar v = dot(w, cands[i]);
    int c = compare(v, best_val);
    if (c < 0) {
      best = i;
      best_val = v;
    } else if (c == 0) {
      int lc = lex_compare(cands[i], cands[best]);
      if (lc < 0 || (lc == 0 && is_exact(cands[i]) && !is_exact(cands[best]))) best = i;
      best_val = prefer_exact(best_val, v);
    }
  }
  OptResult r;
  r.witness = cands[best];
  r.value = best_val;
  for (const auto &x : r.witness)
    if (std::fabs(x.value()) > kBox / 2) r.status = OptResult::Status::Unbounded;
  return r;
}

OptResult PlanarSolver::minimize(const Point &w) const {
  if (empty_) fail(ErrorCode::EmptyRegion, "region is empty");
  if (!conic_ || conic_->degenerate) return pick(static_, w);
  std::vector<Point> cands = static_;
  tangency(w, cands);
  return pick(cands, w);
}

std::vector<Point> PlanarSolver::corners() const {
  std::vector<Point> out;
  for (const auto &p : static_) {
    bool far = false;
    for (const auto &x : p)
      if (std::fabs(x.value()) > kBox / 2) far = true;
    if (far) continue;
    bool dup = false;
    for (auto &q : out) {
      if (same_point(p, q)) {
        dup = true;
        if (is_exact(p) && !is_exact(q)) q = p;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

std::optional<Scalar> PlanarSolver::conic_ray_hit(const Point &x0, const Point &d) const {
  if (!conic_) return std::nullopt;
  std::vector<Point> pts;
  intersect_param_line(x0, d, pts);
  std::optional<Scalar> best;
  Scalar dd = dot(d, d);
  for (const auto &p : pts) {
    Scalar t = dot(sub(p, x0), d) / dd;
    if (t.value() <= 1e-12) continue;
    if (!best || t < *best) best = t;
  }
  return best;
}

OptResult minimize_linear(const ConvexRegion &region, const Point &w) {
  if (w.size() != region.dim()) throw std::invalid_argument("minimize_linear: dimension mismatch");
  bool descent = false;
  for (const auto &g : region.recession())
    if (dot(w, g).sign() < 0) descent = true;
  ConvexRegion base = region.base().linearized();
  OptResult res;
  if (region.dim() == 2) {
    PlanarSolver ps(base);
    res = ps.minimize(w);
  } else {
    if (!base.is_polyhedral())
      fail(ErrorCode::UnsupportedDimension, "second-order cone constraints need dimension 2");
    LpResult lp = solve_lp_lexmin(base.inequalities(), w);
    if (lp.status == LpResult::Status::Infeasible) fail(ErrorCode::EmptyRegion, "region is empty");
    if (lp.status == LpResult::Status::Unbounded) {
      LpResult any = solve_lp(base.inequalities(), Point(w.size(), Scalar(0)));
      res.status = OptResult::Status::Unbounded;
      res.witness = any.x;
      res.value = dot(w, any.x);
      return res;
    }
    res.witness = lp.x;
    res.value = lp.value;
  }
  if (descent) res.status = OptResult::Status::Unbounded;
  return res;
}

OptResult maximize_linear(const ConvexRegion &region, const Point &w) {
  OptResult r = minimize_linear(region, scale(Scalar(-1), w));
  r.value = -r.value;
  return r;
}

bool is_empty(const ConvexRegion &region) {
  ConvexRegion base = region.base().linearized();
  if (region.dim() == 2) return PlanarSolver(base).empty();
  if (!base.is_polyhedral())
    fail(ErrorCode::UnsupportedDimension, "second-order cone constraints need dimension 2");
  return solve_lp(base.inequalities(), Point(region.dim(), Scalar(0))).status ==
         LpResult::Status::Infeasible;
}

namespace {

Containment classify_base(const ConvexRegion &region, const Point &q) {
  bool boundary = false, ambiguous = false;
  auto note_zero = [&](const Scalar &v) {
    if (v.is_exact()) boundary = true;
    else ambiguous = true;
  };
  for (const auto &f : region.inequalities()) {
    Scalar v = f(q);
    int s = v.sign();
    if (s < 0) return Containment::Exterior;
    if (s == 0) note_zero(v);
  }
  for (const auto &c : region.cone_constraints()) {
    if (c.is_exact() && is_exact(q)) {
      Scalar b = c.bound(q);
      if (b.sign() < 0) return Containment::Exterior;
      Scalar sq(0);
      for (const auto &comp : c.components) {
        Scalar v = comp(q);
        sq += v * v;
      }
      int s = compare(b * b, sq);
      if (s < 0) return Containment::Exterior;
      if (s == 0) boundary = true;
    } else {
      Scalar v = c.slack(q);
      int s = v.sign();
      if (s < 0) return Containment::Exterior;
      if (s == 0) note_zero(v);
    }
  }
  if (ambiguous) return Containment::Ambiguous;
  if (boundary) return Containment::Boundary;
  return Containment::Interior;
}

}  // namespace

std::optional<Scalar> interior_margin(const ConvexRegion &region, const Point &q) {
  size_t n = region.dim();
  if (!region.has_recession()) fail(ErrorCode::UnsupportedDimension, "interior_margin needs a recession cone");
  Matrix t(n, Point(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) t[i][j] = region.recession()[j][i];
  auto tinv = inverse(t);
  if (!tinv) fail(ErrorCode::UnsupportedDimension, "recession cone is not full-dimensional");
  ConvexRegion b = region.preimage(t, Point(n, Scalar(0))).base();
  Point qq = toricmin::apply(*tinv, q);

  std::optional<Scalar> best;
  bool any = false;
  for (size_t j = 0; j < n; ++j) {
    // Piece where coordinate j realizes min_k (q_k - b_k).
    ConvexRegion piece = b;
    for (size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      Point coef(n, Scalar(0));
      coef[j] = Scalar(1);
      coef[k] = Scalar(-1);
      piece.add_inequality(AffineForm{coef, qq[k] - qq[j]});
    }
    Point e(n, Scalar(0));
    e[j] = Scalar(1);
    OptResult r;
    try {
      r = minimize_linear(piece, e);
    } catch (const MathError &err) {
      if (err.code() == ErrorCode::EmptyRegion) continue;
      throw;
    }
    any = true;
    if (!r.bounded()) return std::nullopt;
    Scalar v = qq[j] - r.value;
    if (!best) best = v;
    else best = max(*best, v);
  }
  if (!any) fail(ErrorCode::EmptyRegion, "region is empty");
  return best;
}

Containment classify_point(const ConvexRegion &region, const Point &q) {
  if (!region.has_recession()) return classify_base(region, q);
  auto m = interior_margin(region, q);
  if (!m) return Containment::Interior;
  int s = m->sign();
  if (s > 0) return Containment::Interior;
  if (s < 0) return Containment::Exterior;
  return m->is_exact() ? Containment::Boundary : Containment::Ambiguous;
}

bool contains(const ConvexRegion &region, const Point &q) {
  return classify_point(region, q) != Containment::Exterior;
}

bool in_interior(const ConvexRegion &region, const Point &q) {
  Containment c = classify_point(region, q);
  if (c == Containment::Ambiguous)
    fail(ErrorCode::BoundaryAmbiguous, "point " + format_point(q) + " is within tolerance of the boundary");
  return c == Containment::Interior;
}

Scalar ray_entry(const ConvexRegion &region, const Point &q) {
  size_t n = region.dim();
  ConvexRegion b = region.base();
  std::optional<Scalar> best;
  for (size_t j = 0; j < n; ++j) {
    if (q[j].sign() <= 0) throw std::invalid_argument("ray_entry: q must be positive");
    // Piece where b_j / q_j is the largest ratio: q_k b_j - q_j b_k >= 0.
    ConvexRegion piece = b;
    for (size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      Point coef(n, Scalar(0));
      coef[j] = q[k];
      coef[k] = -q[j];
      piece.add_inequality(AffineForm{coef, Scalar(0)});
    }
    Point e(n, Scalar(0));
    e[j] = Scalar(1);
    OptResult r;
    try {
      r = minimize_linear(piece, e);
    } catch (const MathError &err) {
      if (err.code() == ErrorCode::EmptyRegion) continue;
      throw;
    }
    if (!r.bounded()) fail(ErrorCode::UnboundedRegion, "ray_entry: base unbounded below");
    Scalar v = r.value / q[j];
    if (!best) best = v;
    else best = min(*best, v);
  }
  if (!best) fail(ErrorCode::EmptyRegion, "region is empty");
  return *best;
}

}  // namespace toricmin
