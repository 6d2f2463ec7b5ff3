#include "toricmin/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "toricmin/errors.hpp"

namespace toricmin {

const char *error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::UnboundedRegion: return "UnboundedRegion";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::BoundaryAmbiguous: return "BoundaryAmbiguous";
    case ErrorCode::NonSmoothCone: return "NonSmoothCone";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::IncompleteFan: return "IncompleteFan";
    case ErrorCode::NotProjective: return "NotProjective";
    case ErrorCode::PLInconsistent: return "PLInconsistent";
    case ErrorCode::NotCartier: return "NotCartier";
    case ErrorCode::NotBig: return "NotBig";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::PointOutsideChart: return "PointOutsideChart";
    case ErrorCode::NotInTorus: return "NotInTorus";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::UnknownCone: return "UnknownCone";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NefViolation: return "NefViolation";
    case ErrorCode::NoSections: return "NoSections";
  }
  return "Error";
}

Scalar::Scalar(const Rational &q) : exact_(true), q_(q), d_(0.0), tol_(0.0) {
  q_.canonicalize();
}

Scalar Scalar::approx(double v, double tol) {
  Scalar s;
  s.exact_ = false;
  s.d_ = v;
  s.tol_ = tol;
  return s;
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::parse(std::string_view text) {
  std::string t(text);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  size_t start = 0;
  while (start < t.size() && std::isspace(static_cast<unsigned char>(t[start]))) ++start;
  t = t.substr(start);
  if (t.empty()) throw std::invalid_argument("empty number");
  auto slash = t.find('/');
  try {
    if (slash != std::string::npos) {
      mpz_class num(t.substr(0, slash), 10), den(t.substr(slash + 1), 10);
      if (den == 0) throw std::invalid_argument("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return Scalar(q);
    }
    // Decimal with optional exponent, read exactly.
    std::string mant = t;
    long exp10 = 0;
    auto e = t.find_first_of("eE");
    if (e != std::string::npos) {
      mant = t.substr(0, e);
      exp10 = std::stol(t.substr(e + 1));
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("not a number: " + t);
    mpz_class num(digits, 10);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    Rational q = exp10 >= 0 ? Rational(num * pow10) : Rational(num, pow10);
    q.canonicalize();
    if (neg) q = -q;
    return Scalar(q);
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("not a number: " + t);
  }
}

const Rational &Scalar::exact() const {
  if (!exact_) throw std::logic_error("exact() on approximate scalar");
  return q_;
}

Scalar Scalar::as_approx(double tol) const {
  if (!exact_) return approx(d_, std::max(tol_, tol));
  return approx(q_.get_d(), tol);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (exact_) r.q_ = -q_;
  else r.d_ = -d_;
  return r;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  if (exact_ && o.exact_) {
    q_ += o.q_;
    return *this;
  }
  double t = std::max(tolerance(), o.tolerance());
  *this = approx(value() + o.value(), t);
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  if (exact_ && o.exact_) {
    q_ -= o.q_;
    return *this;
  }
  double t = std::max(tolerance(), o.tolerance());
  *this = approx(value() - o.value(), t);
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  if (exact_ && o.exact_) {
    q_ *= o.q_;
    return *this;
  }
  double t = std::max(tolerance(), o.tolerance());
  *this = approx(value() * o.value(), t);
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (exact_ && o.exact_) {
    if (o.q_ == 0) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }
  double t = std::max(tolerance(), o.tolerance());
  *this = approx(value() / o.value(), t);
  return *this;
}

int compare(const Scalar &a, const Scalar &b) {
  if (a.exact_ && b.exact_) return cmp(a.q_, b.q_) < 0 ? -1 : (cmp(a.q_, b.q_) > 0 ? 1 : 0);
  double x = a.value(), y = b.value();
  double t = std::max(a.tolerance(), b.tolerance());
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  if (std::fabs(x - y) <= t * scale) return 0;
  return x < y ? -1 : 1;
}

bool Scalar::identical(const Scalar &o) const {
  if (exact_ != o.exact_) return false;
  if (exact_) return q_ == o.q_;
  return d_ == o.d_ && tol_ == o.tol_;
}

std::string Scalar::str() const {
  if (exact_) return q_.get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d_);
  return buf;
}

bool is_perfect_square(const Rational &q, Rational *root) {
  if (sgn(q) < 0) return false;
  const mpz_class &n = q.get_num();
  const mpz_class &d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = Rational(rn, rd);
    root->canonicalize();
  }
  return true;
}

Scalar sqrt(const Scalar &x) {
  if (x.is_exact()) {
    if (sgn(x.exact()) < 0) throw std::domain_error("sqrt of negative number");
    Rational r;
    if (is_perfect_square(x.exact(), &r)) return Scalar(r);
    return Scalar::approx(std::sqrt(x.exact().get_d()));
  }
  double v = x.value();
  if (v < 0) {
    if (-v <= x.tolerance()) return Scalar::approx(0.0, x.tolerance());
    throw std::domain_error("sqrt of negative number");
  }
  return Scalar::approx(std::sqrt(v), x.tolerance());
}

Scalar abs(const Scalar &x) { return x.sign() < 0 ? -x : x; }

const Scalar &min(const Scalar &a, const Scalar &b) {
  int c = compare(a, b);
  if (c == 0) return prefer_exact(a, b);
  return c < 0 ? a : b;
}

const Scalar &max(const Scalar &a, const Scalar &b) {
  int c = compare(a, b);
  if (c == 0) return prefer_exact(a, b);
  return c > 0 ? a : b;
}

const Scalar &prefer_exact(const Scalar &a, const Scalar &b) {
  if (!a.is_exact() && b.is_exact()) return b;
  return a;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

}  // namespace toricmin
