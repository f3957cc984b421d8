#pragma once

// Exact Gaussian elimination over Q for the small systems of the cyclotomic
// layer (dimension φ(m), at most a few hundred).

#include <optional>
#include <stdexcept>
#include <vector>

#include "padicbeta/core/rational.hpp"

namespace padicbeta {

using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

/// Row-reduces A in place to reduced echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& A, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < A.size(); ++c) {
    std::size_t r = row;
    while (r < A.size() && A[r][c] == 0) ++r;
    if (r == A.size()) continue;
    std::swap(A[r], A[row]);
    Rational inv = 1 / A[row][c];
    for (auto& x : A[row]) x *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (std::size_t k = c; k < A[i].size(); ++k) A[i][k] -= f * A[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Solves A x = b for square invertible A.
inline std::vector<Rational> solve(RationalMatrix A, const std::vector<Rational>& b) {
  std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
  auto piv = detail::rref(A, n);
  if (piv.size() != n) throw std::domain_error("solve: singular system");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n];
  return x;
}

/**
 * A nonzero vector c with Σ_j c_j col_j = 0, where the columns are given as
 * vectors of equal length, or nothing when they are independent. The last
 * free column gets coefficient 1.
 */
inline std::optional<std::vector<Rational>> kernel_vector(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return std::nullopt;
  std::size_t n = cols.size(), rows = cols[0].size();
  RationalMatrix A(rows, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i) A[i][j] = cols[j][i];
  auto piv = detail::rref(A, n);
  if (piv.size() == n) return std::nullopt;
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::size_t free = n;
  for (std::size_t j = n; j-- > 0;)
    if (!is_pivot[j]) {
      free = j;
      break;
    }
  std::vector<Rational> c(n, Rational(0));
  c[free] = 1;
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = -A[r][free];
  return c;
}

}  // namespace padicbeta
