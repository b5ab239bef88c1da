#pragma once

#include <optional>
#include <vector>

#include "kassoc/rational.hpp"

namespace kassoc {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

Matrix zeros(std::size_t rows, std::size_t cols);
Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
Rational determinant(Matrix m);
// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m, std::size_t cols);
// The solution of a x = b when it exists and is unique.
std::optional<Vector> solve_unique(const Matrix& a, const Vector& b);
Rational dot(const Vector& a, const Vector& b);

}  // namespace kassoc
