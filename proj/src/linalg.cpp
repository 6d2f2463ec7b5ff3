#include "toricmin/linalg.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toricmin {

Scalar dot(const Point &a, const Point &b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Scalar s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point add(const Point &a, const Point &b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point &a, const Point &b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale(const Scalar &s, const Point &a) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Point to_point(const IntVector &v) {
  Point p;
  p.reserve(v.size());
  for (auto x : v) p.emplace_back(static_cast<long>(x));
  return p;
}

bool is_exact(const Point &p) {
  for (const auto &x : p)
    if (!x.is_exact()) return false;
  return true;
}

std::vector<double> to_doubles(const Point &p) {
  std::vector<double> r;
  r.reserve(p.size());
  for (const auto &x : p) r.push_back(x.value());
  return r;
}

Matrix identity(std::size_t n) {
  Matrix m(n, Point(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Matrix transpose(const Matrix &a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), Point(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix multiply(const Matrix &a, const Matrix &b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c(n, Point(m, Scalar(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

Point apply(const Matrix &a, const Point &x) {
  Point y(a.size(), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

Matrix to_matrix(const IntMatrix &a) {
  Matrix m;
  for (const auto &row : a) m.push_back(to_point(row));
  return m;
}

namespace {

// Partial pivoting on |value|. Exact inputs never need it, but it keeps
// approximate inputs tame.
size_t pick_pivot(const Matrix &a, size_t col, size_t from) {
  size_t best = a.size();
  double best_abs = -1;
  for (size_t r = from; r < a.size(); ++r) {
    if (a[r][col].is_zero()) continue;
    double v = std::fabs(a[r][col].value());
    if (v > best_abs) {
      best_abs = v;
      best = r;
    }
  }
  return best;
}

}  // namespace

Scalar determinant(Matrix a) {
  size_t n = a.size();
  Scalar det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = pick_pivot(a, c, c);
    if (p == n) return Scalar(0) * det;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Scalar f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix &a) {
  size_t n = a.size();
  Matrix aug(n, Point(2 * n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = Scalar(1);
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = pick_pivot(aug, c, c);
    if (p == n) return std::nullopt;
    std::swap(aug[p], aug[c]);
    Scalar piv = aug[c][c];
    for (size_t k = 0; k < 2 * n; ++k) aug[c][k] /= piv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c].is_zero()) continue;
      Scalar f = aug[r][c];
      for (size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  Matrix inv(n, Point(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<Point> solve(const Matrix &a, const Point &b) {
  auto inv = inverse(a);
  if (!inv) return std::nullopt;
  return toricmin::apply(*inv, b);
}

std::size_t rank(Matrix a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = pick_pivot(a, c, r);
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar f = a[i][c] / a[r][c];
      for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

std::int64_t int_determinant(const IntMatrix &a) {
  Matrix m = to_matrix(a);
  Scalar d = determinant(m);
  return d.exact().get_num().get_si();
}

IntMatrix int_transpose(const IntMatrix &a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), IntVector(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix int_multiply(const IntMatrix &a, const IntMatrix &b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, IntVector(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

std::int64_t int_dot(const IntVector &a, const IntVector &b) {
  std::int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix &a) {
  auto d = int_determinant(a);
  if (d != 1 && d != -1) return std::nullopt;
  auto inv = inverse(to_matrix(a));
  if (!inv) return std::nullopt;
  IntMatrix r(a.size(), IntVector(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) r[i][j] = (*inv)[i][j].exact().get_num().get_si();
  return r;
}

std::int64_t gcd_of(const IntVector &v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

std::string format_point(const Point &p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i].str();
  os << ")";
  return os.str();
}

std::string format_int_vector(const IntVector &v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace toricmin
