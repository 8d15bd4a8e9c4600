#pragma once

// Exact solution of overdetermined but consistent integer linear systems.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "error.hpp"

namespace cylkit {

using Rational = boost::multiprecision::cpp_rational;

/// Solves A x = b over Q by Gauss-Jordan elimination. A is rows x cols with
/// full column rank expected. Returns nullopt when the system is singular
/// (rank < cols) or inconsistent.
inline std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Int>>& A,
                                                        const std::vector<Int>& b) {
  const std::size_t rows = A.size();
  require(b.size() == rows, "right-hand side has the wrong number of rows");
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    require(A[r].size() == cols, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) M[r][c] = A[r][c];
    M[r][cols] = b[r];
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && M[sel][c] == 0) ++sel;
    if (sel == rows) return std::nullopt;
    std::swap(M[sel], M[pivot_row]);
    const Rational inv = 1 / M[pivot_row][c];
    for (auto& x : M[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || M[r][c] == 0) continue;
      const Rational f = M[r][c];
      for (std::size_t k = c; k <= cols; ++k) M[r][k] -= f * M[pivot_row][k];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r)
    if (M[r][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = M[c][cols];
  return x;
}

}  // namespace cylkit
