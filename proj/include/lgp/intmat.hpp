#pragma once

#include <cstdint>
#include <vector>

namespace lgp::intmat {

using Int = std::int64_t;
// Row-major: m[row][col].
using Matrix = std::vector<std::vector<Int>>;

Matrix zeros(std::size_t rows, std::size_t cols);
Matrix identity(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);

// Checked arithmetic; throws InvalidArgument on int64 overflow.
Int add(Int a, Int b);
Int mul(Int a, Int b);

struct Echelon {
  Matrix h;         // a * u, in column echelon form
  Matrix u;         // unimodular
  std::size_t rank = 0;  // nonzero columns of h come first
};

// Column-style Hermite reduction: pivot rows strictly increase from left to
// right and every entry right of a pivot in its row is zero.
Echelon column_echelon(const Matrix& a);

// Basis of the integer kernel {z : a z = 0}, as columns.
Matrix kernel(const Matrix& a);

// Diagonal of the Smith normal form, normalized so each entry divides the
// next; length min(rows, cols), zeros last.
std::vector<Int> smith_diagonal(Matrix a);

}  // namespace lgp::intmat
