#include "toricmin/region.hpp"

#include <stdexcept>

#include "toricmin/errors.hpp"

namespace toricmin {

bool AffineForm::is_exact() const { return constant.is_exact() && toricmin::is_exact(coef); }

bool AffineForm::is_constant() const {
  for (const auto &c : coef)
    if (!c.is_zero()) return false;
  return true;
}

Scalar ConeConstraint::slack(const Point &x) const {
  Scalar b = bound(x);
  Scalar sq(0);
  for (const auto &c : components) {
    Scalar v = c(x);
    sq += v * v;
  }
  return b - sqrt(max(sq, Scalar(0)));
}

bool ConeConstraint::is_exact() const {
  if (!bound.is_exact()) return false;
  for (const auto &c : components)
    if (!c.is_exact()) return false;
  return true;
}

bool ConvexRegion::is_exact() const {
  for (const auto &f : ineqs_)
    if (!f.is_exact()) return false;
  for (const auto &c : cones_)
    if (!c.is_exact()) return false;
  for (const auto &r : recession_)
    if (!toricmin::is_exact(r)) return false;
  return true;
}

ConvexRegion &ConvexRegion::add_inequality(AffineForm f) {
  if (f.coef.size() != dim_) throw std::invalid_argument("inequality dimension mismatch");
  ineqs_.push_back(std::move(f));
  return *this;
}

ConvexRegion &ConvexRegion::add_equality(const AffineForm &f) {
  add_inequality(f);
  add_inequality(AffineForm{scale(Scalar(-1), f.coef), -f.constant});
  return *this;
}

ConvexRegion &ConvexRegion::add_cone_constraint(ConeConstraint c) {
  if (c.bound.coef.size() != dim_) throw std::invalid_argument("cone constraint dimension mismatch");
  cones_.push_back(std::move(c));
  return *this;
}

ConvexRegion ConvexRegion::with_recession(std::vector<Point> generators) const {
  ConvexRegion r = *this;
  r.recession_ = std::move(generators);
  return r;
}

ConvexRegion ConvexRegion::base() const {
  ConvexRegion r = *this;
  r.recession_.clear();
  return r;
}

bool ConvexRegion::base_contains(const Point &x) const {
  for (const auto &f : ineqs_)
    if (f(x).sign() < 0) return false;
  for (const auto &c : cones_) {
    if (c.is_exact() && toricmin::is_exact(x)) {
      // Exact test avoids the square root.
      Scalar b = c.bound(x);
      if (b.sign() < 0) return false;
      Scalar sq(0);
      for (const auto &comp : c.components) {
        Scalar v = comp(x);
        sq += v * v;
      }
      if (compare(b * b, sq) < 0) return false;
    } else if (c.slack(x).sign() < 0) {
      return false;
    }
  }
  return true;
}

namespace {

AffineForm pull_back(const AffineForm &f, const Matrix &t, const Point &shift) {
  // <a, T y + s> + b = <T^T a, y> + <a, s> + b
  size_t m = t.empty() ? 0 : t[0].size();
  Point coef(m, Scalar(0));
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < t.size(); ++i) coef[j] += t[i][j] * f.coef[i];
  return AffineForm{coef, dot(f.coef, shift) + f.constant};
}

}  // namespace

ConvexRegion ConvexRegion::preimage(const Matrix &t, const Point &shift) const {
  size_t m = t.empty() ? 0 : t[0].size();
  ConvexRegion r(m);
  for (const auto &f : ineqs_) r.ineqs_.push_back(pull_back(f, t, shift));
  for (const auto &c : cones_) {
    ConeConstraint cc{pull_back(c.bound, t, shift), {}};
    for (const auto &comp : c.components) cc.components.push_back(pull_back(comp, t, shift));
    r.cones_.push_back(std::move(cc));
  }
  if (!recession_.empty()) {
    if (t.size() != m) fail(ErrorCode::UnsupportedDimension, "preimage of a cone under a non-square map");
    auto inv = inverse(t);
    if (!inv) fail(ErrorCode::UnsupportedDimension, "preimage of a cone under a singular map");
    for (const auto &g : recession_) r.recession_.push_back(toricmin::apply(*inv, g));
  }
  return r;
}

ConvexRegion ConvexRegion::translated(const Point &shift) const {
  // x in R + s  <=>  x - s in R
  ConvexRegion r = preimage(identity(dim_), scale(Scalar(-1), shift));
  r.recession_ = recession_;
  return r;
}

ConvexRegion ConvexRegion::scaled(const Scalar &t) const {
  if (t.sign() <= 0) throw std::invalid_argument("scaled: factor must be positive");
  // x in tR <=> f(x/t) >= 0 <=> <a, x> + t b >= 0
  ConvexRegion r = *this;
  for (auto &f : r.ineqs_) f.constant *= t;
  for (auto &c : r.cones_) {
    c.bound.constant *= t;
    for (auto &comp : c.components) comp.constant *= t;
  }
  return r;
}

ConvexRegion ConvexRegion::intersect(const ConvexRegion &other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("intersect: dimension mismatch");
  if (has_recession() || other.has_recession())
    fail(ErrorCode::UnsupportedDimension, "intersect of regions with recession cones");
  ConvexRegion r = *this;
  for (const auto &f : other.ineqs_) r.ineqs_.push_back(f);
  for (const auto &c : other.cones_) r.cones_.push_back(c);
  return r;
}

ConvexRegion ConvexRegion::linearized() const {
  ConvexRegion r(dim_);
  r.ineqs_ = ineqs_;
  r.recession_ = recession_;
  for (const auto &c : cones_) {
    std::vector<AffineForm> rows;
    for (const auto &comp : c.components) {
      if (comp.is_constant() && comp.constant.is_zero()) continue;
      rows.push_back(comp);
    }
    if (rows.empty()) {
      r.ineqs_.push_back(c.bound);
      continue;
    }
    // Check whether every row is a multiple k_i * rows[0] (as affine forms).
    Point base(rows[0].coef);
    base.push_back(rows[0].constant);
    size_t pivot = 0;
    while (base[pivot].is_zero()) ++pivot;
    Scalar norm_sq(0);
    bool rank_one = true;
    for (const auto &row : rows) {
      Point v(row.coef);
      v.push_back(row.constant);
      Scalar k = v[pivot] / base[pivot];
      for (size_t i = 0; i < v.size(); ++i)
        if (compare(v[i], k * base[i]) != 0) rank_one = false;
      if (!rank_one) break;
      norm_sq += k * k;
    }
    if (!rank_one) {
      r.cones_.push_back(c);
      continue;
    }
    // bound >= kappa |l|  <=>  bound - kappa l >= 0 and bound + kappa l >= 0
    Scalar kappa = sqrt(norm_sq);
    const AffineForm &l = rows[0];
    AffineForm plus{add(c.bound.coef, scale(kappa, l.coef)), c.bound.constant + kappa * l.constant};
    AffineForm minus{sub(c.bound.coef, scale(kappa, l.coef)), c.bound.constant - kappa * l.constant};
    r.ineqs_.push_back(plus);
    r.ineqs_.push_back(minus);
  }
  return r;
}

ConvexRegion nonnegative_orthant(std::size_t dim) {
  ConvexRegion r(dim);
  for (size_t i = 0; i < dim; ++i) {
    Point e(dim, Scalar(0));
    e[i] = Scalar(1);
    r.add_inequality(AffineForm{e, Scalar(0)});
  }
  return r;
}

std::vector<Point> standard_basis(std::size_t dim) {
  std::vector<Point> b;
  for (size_t i = 0; i < dim; ++i) {
    Point e(dim, Scalar(0));
    e[i] = Scalar(1);
    b.push_back(e);
  }
  return b;
}

}  // namespace toricmin
