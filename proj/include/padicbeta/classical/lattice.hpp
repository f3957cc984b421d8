#pragma once

// LLL reduction of an integer lattice basis with exact rational Gram–Schmidt
// data. Dimensions here stay below ten, so clarity wins over speed.

#include <stdexcept>
#include <utility>
#include <vector>

#include "padicbeta/core/rational.hpp"

namespace padicbeta {

using IntVector = std::vector<BigInt>;

namespace detail {

inline Rational dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rational(s);
}

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> B;  // squared norms of the orthogonalized vectors
};

inline GramSchmidt gram_schmidt(const std::vector<IntVector>& b) {
  std::size_t n = b.size();
  GramSchmidt gs{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))), std::vector<Rational>(n)};
  std::vector<std::vector<Rational>> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    star[i].assign(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Rational num = 0;
      for (std::size_t k = 0; k < b[i].size(); ++k) num += Rational(b[i][k]) * star[j][k];
      gs.mu[i][j] = num / gs.B[j];
      for (std::size_t k = 0; k < star[i].size(); ++k) star[i][k] -= gs.mu[i][j] * star[j][k];
    }
    Rational norm = 0;
    for (const auto& v : star[i]) norm += v * v;
    if (norm == 0) throw std::invalid_argument("lll: basis vectors are linearly dependent");
    gs.B[i] = norm;
  }
  return gs;
}

inline BigInt round_nearest(const Rational& q) {
  // floor(q + 1/2)
  return floor(q + Rational(1, 2));
}

}  // namespace detail

/// In-place LLL with parameter δ (default 0.99).
inline void lll_reduce(std::vector<IntVector>& b, const Rational& delta = Rational(99, 100)) {
  std::size_t n = b.size();
  if (n < 2) return;
  auto gs = detail::gram_schmidt(b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      BigInt r = detail::round_nearest(gs.mu[k][jj]);
      if (r == 0) continue;
      for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[jj][c];
      for (std::size_t l = 0; l < jj; ++l) gs.mu[k][l] -= Rational(r) * gs.mu[jj][l];
      gs.mu[k][jj] -= Rational(r);
    }
    Rational lovasz = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1];
    if (gs.B[k] >= lovasz) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs = detail::gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

}  // namespace padicbeta
