#include "toricmin/torus_ns.hpp"

#include <Eigen/Dense>

#include "toricmin/errors.hpp"

namespace toricmin {

HermitianMatrix HermitianMatrix::zero(std::size_t d) {
  return HermitianMatrix{Matrix(d, Point(d, Scalar(0))), Matrix(d, Point(d, Scalar(0)))};
}

HermitianMatrix HermitianMatrix::real(const Matrix &m) {
  HermitianMatrix h = zero(m.size());
  h.re = m;
  return h;
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix &o) const {
  HermitianMatrix h = *this;
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) {
      h.re[i][j] += o.re[i][j];
      h.im[i][j] += o.im[i][j];
    }
  return h;
}

HermitianMatrix HermitianMatrix::scaled(const Scalar &s) const {
  HermitianMatrix h = *this;
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) {
      h.re[i][j] *= s;
      h.im[i][j] *= s;
    }
  return h;
}

bool HermitianMatrix::is_exact() const {
  for (size_t i = 0; i < dim(); ++i)
    if (!toricmin::is_exact(re[i]) || !toricmin::is_exact(im[i])) return false;
  return true;
}

TorusBase TorusBase::exe() { return TorusBase{}; }

bool operator==(const TorusBase &a, const TorusBase &b) {
  if (a.kind != b.kind || a.d != b.d || a.basis_forms.size() != b.basis_forms.size()) return false;
  for (size_t k = 0; k < a.basis_forms.size(); ++k)
    for (size_t i = 0; i < a.d; ++i)
      for (size_t j = 0; j < a.d; ++j)
        if (!a.basis_forms[k].re[i][j].identical(b.basis_forms[k].re[i][j]) ||
            !a.basis_forms[k].im[i][j].identical(b.basis_forms[k].im[i][j]))
          return false;
  return true;
}

namespace {

void check_arity(const TorusBase &base, const NSClass &cls) {
  if (cls.size() != base.ns_rank())
    fail(ErrorCode::ArityMismatch, "NS class has " + std::to_string(cls.size()) + " coordinates, expected " +
                                       std::to_string(base.ns_rank()));
}

Eigen::MatrixXcd to_eigen(const HermitianMatrix &h) {
  size_t d = h.dim();
  Eigen::MatrixXcd m(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m(i, j) = Complex(h.re[i][j].value(), h.im[i][j].value());
  return m;
}

// Determinant of a 2x2 hermitian matrix: a c - |b|^2.
Scalar det2(const HermitianMatrix &h) {
  return h.re[0][0] * h.re[1][1] - h.re[0][1] * h.re[0][1] - h.im[0][1] * h.im[0][1];
}

}  // namespace

HermitianMatrix weight_form(const TorusBase &base, const NSClass &cls) {
  check_arity(base, cls);
  if (base.kind == TorusBase::Kind::ExE) {
    const Scalar &p = cls[0], &q = cls[1], &r = cls[2];
    return HermitianMatrix::real(Matrix{{p + r, -r}, {-r, q + r}});
  }
  HermitianMatrix h = HermitianMatrix::zero(base.d);
  for (size_t k = 0; k < cls.size(); ++k) h = h + base.basis_forms[k].scaled(cls[k]);
  return h;
}

double evaluate_weight(const HermitianMatrix &h, const std::vector<Complex> &z) {
  if (z.size() != h.dim()) fail(ErrorCode::ArityMismatch, "torus point has the wrong dimension");
  Complex s(0, 0);
  for (size_t i = 0; i < h.dim(); ++i)
    for (size_t j = 0; j < h.dim(); ++j) s += z[i] * Complex(h.re[i][j].value(), h.im[i][j].value()) * std::conj(z[j]);
  return s.real();
}

bool is_nef(const TorusBase &base, const NSClass &cls) {
  check_arity(base, cls);
  if (base.kind == TorusBase::Kind::ExE) {
    const Scalar &a = cls[0], &b = cls[1], &c = cls[2];
    return (a * b + b * c + c * a).sign() >= 0 && (a + b + c).sign() >= 0;
  }
  HermitianMatrix h = weight_form(base, cls);
  if (base.d == 2) {
    return (h.re[0][0] + h.re[1][1]).sign() >= 0 && det2(h).sign() >= 0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h));
  return es.eigenvalues().minCoeff() >= -kDefaultTolerance * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
}

bool is_ample(const TorusBase &base, const NSClass &cls) {
  check_arity(base, cls);
  if (base.kind == TorusBase::Kind::ExE) {
    const Scalar &a = cls[0], &b = cls[1], &c = cls[2];
    return (a * b + b * c + c * a).sign() > 0 && (a + b + c).sign() > 0;
  }
  HermitianMatrix h = weight_form(base, cls);
  if (base.d == 2) {
    return (h.re[0][0] + h.re[1][1]).sign() > 0 && det2(h).sign() > 0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h));
  return es.eigenvalues().minCoeff() > kDefaultTolerance * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
}

Scalar self_intersection(const TorusBase &base, const NSClass &cls) {
  check_arity(base, cls);
  if (base.kind == TorusBase::Kind::ExE) {
    const Scalar &a = cls[0], &b = cls[1], &c = cls[2];
    return Scalar(2) * (a * b + b * c + c * a);
  }
  HermitianMatrix h = weight_form(base, cls);
  Scalar fact(1);
  for (size_t k = 2; k <= base.d; ++k) fact *= Scalar(static_cast<long>(k));
  if (base.d == 2) return fact * det2(h);
  Eigen::MatrixXcd m = to_eigen(h);
  return fact * Scalar::approx(m.determinant().real());
}

Scalar section_dimension(const TorusBase &base, const NSClass &cls) {
  Scalar fact(1);
  for (size_t k = 2; k <= base.d; ++k) fact *= Scalar(static_cast<long>(k));
  return self_intersection(base, cls) / fact;
}

ConeConstraint psd_cone_constraint(const HermitianMatrix &h0, const std::vector<HermitianMatrix> &hk) {
  if (h0.dim() != 2) fail(ErrorCode::UnsupportedDimension, "conic nef constraint needs d = 2");
  // [[A, B],[conj B, C]] >= 0  <=>  (A + C)/2 >= || ((A - C)/2, Re B, Im B) ||
  auto form = [&](auto entry) {
    AffineForm f;
    f.constant = entry(h0);
    for (const auto &h : hk) f.coef.push_back(entry(h));
    return f;
  };
  ConeConstraint c;
  c.bound = form([](const HermitianMatrix &h) { return (h.re[0][0] + h.re[1][1]) / Scalar(2); });
  c.components.push_back(form([](const HermitianMatrix &h) { return (h.re[0][0] - h.re[1][1]) / Scalar(2); }));
  c.components.push_back(form([](const HermitianMatrix &h) { return h.re[0][1]; }));
  c.components.push_back(form([](const HermitianMatrix &h) { return h.im[0][1]; }));
  return c;
}

Point to_l_basis(const NSClass &cls) {
  if (cls.size() != 3) fail(ErrorCode::ArityMismatch, "l-basis needs an ExE class");
  const Scalar &p = cls[0], &q = cls[1], &r = cls[2];
  Scalar diff = q - p;
  Scalar b = diff.is_exact() && diff.is_zero() ? Scalar(0) : sqrt(Scalar(3)) * diff;
  return Point{p + q - Scalar(2) * r, b, Scalar(2) * (p + q + r)};
}

NSClass from_l_basis(const Point &l) {
  if (l.size() != 3) fail(ErrorCode::ArityMismatch, "l-basis has three coordinates");
  const Scalar &a = l[0], &b = l[1], &c = l[2];
  Scalar sb = b.is_exact() && b.is_zero() ? Scalar(0) : sqrt(Scalar(3)) * b;
  Scalar six(6);
  return NSClass{(a - sb + c) / six, (a + sb + c) / six, (c - Scalar(2) * a) / six};
}

}  // namespace toricmin
