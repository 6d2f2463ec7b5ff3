#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricmin/scalar.hpp"

namespace toricmin {

using Point = std::vector<Scalar>;
using Matrix = std::vector<std::vector<Scalar>>;  // row-major

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major

Scalar dot(const Point &a, const Point &b);
Point add(const Point &a, const Point &b);
Point sub(const Point &a, const Point &b);
Point scale(const Scalar &s, const Point &a);
Point to_point(const IntVector &v);
bool is_exact(const Point &p);
std::vector<double> to_doubles(const Point &p);

Matrix identity(std::size_t n);
Matrix transpose(const Matrix &a);
Matrix multiply(const Matrix &a, const Matrix &b);
Point apply(const Matrix &a, const Point &x);
Matrix to_matrix(const IntMatrix &a);

Scalar determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix &a);
std::optional<Point> solve(const Matrix &a, const Point &b);

// Rank by elimination (exact for exact input, tolerance-aware otherwise).
std::size_t rank(Matrix a);

std::int64_t int_determinant(const IntMatrix &a);
IntMatrix int_transpose(const IntMatrix &a);
IntMatrix int_multiply(const IntMatrix &a, const IntMatrix &b);
std::int64_t int_dot(const IntVector &a, const IntVector &b);
// Inverse of a unimodular matrix; nullopt when |det| != 1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix &a);

std::int64_t gcd_of(const IntVector &v);

std::string format_point(const Point &p);
std::string format_int_vector(const IntVector &v);

}  // namespace toricmin
