#include "lgp/intmat.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lgp/error.hpp"

namespace lgp::intmat {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "integer overflow in matrix reduction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "integer overflow in matrix reduction");
  return r;
}

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<Int>(cols, 0)); }

Matrix identity(std::size_t n) {
  Matrix m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  Matrix r = zeros(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) r[i][j] = add(r[i][j], mul(a[i][k], b[k][j]));
  return r;
}

namespace {

// col_j <- col_j - q * col_k
void col_axpy(Matrix& m, std::size_t j, std::size_t k, Int q) {
  for (auto& row : m) row[j] = add(row[j], mul(-q, row[k]));
}

void col_swap(Matrix& m, std::size_t j, std::size_t k) {
  for (auto& row : m) std::swap(row[j], row[k]);
}

void col_negate(Matrix& m, std::size_t j) {
  for (auto& row : m) row[j] = -row[j];
}

// Floor division for the Euclidean steps.
Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Echelon column_echelon(const Matrix& a) {
  Echelon r;
  r.h = a;
  const std::size_t rows = a.size(), cols = rows == 0 ? 0 : a[0].size();
  r.u = identity(cols);
  std::size_t pivot_col = 0;
  for (std::size_t i = 0; i < rows && pivot_col < cols; ++i) {
    // Euclid across columns pivot_col.. until only pivot_col is nonzero in row i.
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = pivot_col; j < cols; ++j)
        if (r.h[i][j] != 0 && (best == cols || std::abs(r.h[i][j]) < std::abs(r.h[i][best]))) best = j;
      if (best == cols) break;
      if (best != pivot_col) {
        col_swap(r.h, best, pivot_col);
        col_swap(r.u, best, pivot_col);
      }
      bool done = true;
      for (std::size_t j = pivot_col + 1; j < cols; ++j) {
        if (r.h[i][j] == 0) continue;
        const Int q = floor_div(r.h[i][j], r.h[i][pivot_col]);
        col_axpy(r.h, j, pivot_col, q);
        col_axpy(r.u, j, pivot_col, q);
        if (r.h[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (r.h[i][pivot_col] != 0) {
      if (r.h[i][pivot_col] < 0) {
        col_negate(r.h, pivot_col);
        col_negate(r.u, pivot_col);
      }
      ++pivot_col;
    }
  }
  r.rank = pivot_col;
  return r;
}

Matrix kernel(const Matrix& a) {
  const auto ech = column_echelon(a);
  const std::size_t cols = ech.u.size();
  Matrix k = zeros(cols, cols - ech.rank);
  for (std::size_t j = ech.rank; j < cols; ++j)
    for (std::size_t i = 0; i < cols; ++i) k[i][j - ech.rank] = ech.u[i][j];
  return k;
}

std::vector<Int> smith_diagonal(Matrix a) {
  const std::size_t rows = a.size(), cols = rows == 0 ? 0 : a[0].size();
  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || std::abs(a[i][j]) < std::abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        exhausted = true;
        break;
      }
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      const Int p = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = floor_div(a[i][t], p);
        for (std::size_t j = t; j < cols; ++j) a[i][j] = add(a[i][j], mul(-q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Int q = floor_div(a[t][j], p);
        for (std::size_t i = t; i < rows; ++i) a[i][j] = add(a[i][j], mul(-q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (exhausted) break;
  }

  std::vector<Int> d(n, 0);
  for (std::size_t s = 0; s < t; ++s) d[s] = std::abs(a[s][s]);
  // gcd/lcm sweeps turn any diagonal into the divisibility chain.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (d[x] == 0 && d[y] == 0) continue;
      const Int g = std::gcd(d[x], d[y]);
      const Int l = (d[x] == 0 || d[y] == 0) ? 0 : mul(d[x] / g, d[y]);
      d[x] = g;
      d[y] = l;
    }
  return d;
}

}  // namespace lgp::intmat
