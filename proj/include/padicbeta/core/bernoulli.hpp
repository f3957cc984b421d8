#pragma once

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "padicbeta/core/rational.hpp"

namespace padicbeta {

/**
 * Exact Bernoulli numbers B_0, B_1, ... with B_1 = -1/2.
 *
 * Grows on demand from the recurrence sum_{j<n} C(n+1, j) B_j = -(n+1) B_n.
 * Reads take a shared lock, extension takes the exclusive lock, so one
 * instance can be shared across worker threads.
 */
class BernoulliCache {
 public:
  BernoulliCache() : table_{Rational(1), Rational(-1, 2)} {}

  Rational get(std::size_t n) const {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    extend_locked(n);
    return table_[n];
  }

  /// Copies B_0..B_n in one locked pass.
  std::vector<Rational> upto(std::size_t n) const {
    get(n);
    std::shared_lock lock(mutex_);
    return {table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n + 1)};
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  static BernoulliCache& shared() {
    static BernoulliCache cache;
    return cache;
  }

 private:
  void extend_locked(std::size_t n) const {
    while (table_.size() <= n) {
      std::size_t k = table_.size();
      if (k % 2 == 1) {
        table_.emplace_back(0);
        continue;
      }
      Rational s = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j > 1 && j % 2 == 1) continue;
        s += Rational(binomial(k + 1, j)) * table_[j];
      }
      Rational b = -s / Rational(static_cast<long>(k + 1));
      b.canonicalize();
      table_.push_back(b);
    }
  }

  mutable std::shared_mutex mutex_;
  mutable std::vector<Rational> table_;
};

inline Rational bernoulli(std::size_t n) { return BernoulliCache::shared().get(n); }

/// B_n(x) = sum_k C(n, k) B_k x^{n-k}, exact.
inline Rational bernoulli_poly(std::size_t n, const Rational& x) {
  auto b = BernoulliCache::shared().upto(n);
  Rational result = 0;
  Rational xpow = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    result += Rational(binomial(n, k)) * b[k] * xpow;
    xpow *= x;
  }
  result.canonicalize();
  return result;
}

}  // namespace padicbeta
