#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace toricmin {

using Rational = mpq_class;

inline constexpr double kDefaultTolerance = 1e-9;

// A real number that is either an exact rational or a double carrying an
// absolute/relative tolerance. Arithmetic between two exact values stays
// exact; anything touching an approximate value becomes approximate and
// inherits the larger tolerance.
class Scalar {
 public:
  Scalar() : exact_(true), q_(0), d_(0.0), tol_(0.0) {}
  Scalar(int v) : Scalar(Rational(v)) {}
  Scalar(long v) : Scalar(Rational(v)) {}
  Scalar(long long v) : Scalar(Rational(static_cast<long>(v))) {}
  Scalar(const Rational &q);
  Scalar(const mpz_class &z) : Scalar(Rational(z)) {}

  static Scalar approx(double v, double tol = kDefaultTolerance);
  static Scalar ratio(long num, long den);

  // Accepts "7", "-3/4", "0.125" (read exactly) and "1e-3" style floats
  // (read exactly as well; the decimal expansion is finite).
  static Scalar parse(std::string_view text);

  bool is_exact() const { return exact_; }
  const Rational &exact() const;
  double value() const { return exact_ ? q_.get_d() : d_; }
  double tolerance() const { return exact_ ? 0.0 : tol_; }

  Scalar as_approx(double tol = kDefaultTolerance) const;

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  // -1, 0, 1. Approximate operands compare equal when they are within
  // tol * max(1, |a|, |b|).
  friend int compare(const Scalar &a, const Scalar &b);

  friend bool operator==(const Scalar &a, const Scalar &b) { return compare(a, b) == 0; }
  friend bool operator!=(const Scalar &a, const Scalar &b) { return compare(a, b) != 0; }
  friend bool operator<(const Scalar &a, const Scalar &b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar &a, const Scalar &b) { return compare(a, b) <= 0; }
  friend bool operator>(const Scalar &a, const Scalar &b) { return compare(a, b) > 0; }
  friend bool operator>=(const Scalar &a, const Scalar &b) { return compare(a, b) >= 0; }

  // Structural equality: same mode and same bits. Used for round trips.
  bool identical(const Scalar &o) const;

  int sign() const { return compare(*this, Scalar(0)); }
  bool is_zero() const { return sign() == 0; }

  // Exact text for rationals ("p" or "p/q"); %.17g for approximations.
  std::string str() const;

 private:
  bool exact_;
  Rational q_;
  double d_;
  double tol_;
};

// Exact when the argument is the square of a rational.
Scalar sqrt(const Scalar &x);
Scalar abs(const Scalar &x);
const Scalar &min(const Scalar &a, const Scalar &b);
const Scalar &max(const Scalar &a, const Scalar &b);

// When two scalars compare equal, prefer the exact one.
const Scalar &prefer_exact(const Scalar &a, const Scalar &b);

std::ostream &operator<<(std::ostream &os, const Scalar &s);

bool is_perfect_square(const Rational &q, Rational *root = nullptr);

}  // namespace toricmin
