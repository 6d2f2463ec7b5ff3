#pragma once

#include <complex>
#include <vector>

#include "toricmin/linalg.hpp"
#include "toricmin/region.hpp"

namespace toricmin {

using Complex = std::complex<double>;

// Hermitian matrix split into real (symmetric) and imaginary (antisymmetric)
// parts.
struct HermitianMatrix {
  Matrix re, im;

  std::size_t dim() const { return re.size(); }
  static HermitianMatrix zero(std::size_t d);
  static HermitianMatrix real(const Matrix &m);
  HermitianMatrix operator+(const HermitianMatrix &o) const;
  HermitianMatrix scaled(const Scalar &s) const;
  bool is_exact() const;
};

// The base torus V = C^d / Lambda, described through its Neron-Severi group.
//  - ExE: V = E x E for an elliptic curve without complex multiplication;
//    NS has basis (f1, f2, delta).
//  - Hermitian: an explicit Z-basis of NS given by hermitian forms.
struct TorusBase {
  enum class Kind { ExE, Hermitian };
  Kind kind = Kind::ExE;
  std::size_t d = 2;
  std::vector<HermitianMatrix> basis_forms;  // Hermitian kind only

  static TorusBase exe();
  std::size_t ns_rank() const { return kind == Kind::ExE ? 3 : basis_forms.size(); }

  friend bool operator==(const TorusBase &a, const TorusBase &b);
};

using NSClass = Point;  // coordinates in the NS basis of the base

// Hermitian form of the curvature of the flat-plus-quadratic metric of the
// class. On ExE: H(f1) = diag(1,0), H(f2) = diag(0,1),
// H(delta) = [[1,-1],[-1,1]].
HermitianMatrix weight_form(const TorusBase &base, const NSClass &cls);

// z H zbar^T, the quadratic part of the canonical weight at z.
double evaluate_weight(const HermitianMatrix &h, const std::vector<Complex> &z);

bool is_nef(const TorusBase &base, const NSClass &cls);
bool is_ample(const TorusBase &base, const NSClass &cls);

// L^d. On ExE 2(ab + bc + ca); on a hermitian base d! det H.
Scalar self_intersection(const TorusBase &base, const NSClass &cls);

// Sections of an ample class: L^d / d!.
Scalar section_dimension(const TorusBase &base, const NSClass &cls);

// For d = 2: H >= 0 written as a second-order cone constraint on the affine
// family H0 + sum_k m_k H_k.
ConeConstraint psd_cone_constraint(const HermitianMatrix &h0, const std::vector<HermitianMatrix> &hk);

// Coordinates of an ExE class in the basis
// l1 = (f1 + f2 - 2 delta)/6, l2 = sqrt(3)(f2 - f1)/6, l3 = (f1 + f2 + delta)/6.
Point to_l_basis(const NSClass &cls);
NSClass from_l_basis(const Point &l);

}  // namespace toricmin
