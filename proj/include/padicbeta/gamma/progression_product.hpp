#pragma once

// Products over arithmetic progressions, Π_{l<n} (c + p^e l) mod p^W, for n
// as large as p^W. The naive product needs n multiplications; here n is
// walked digit by digit in base p using block polynomials
//   R_s(u) = Π_{l < p^s} (c + u + p^e l),
// which are only ever evaluated at u of valuation >= e + s, so every
// coefficient of u^k with k (e + s) >= W can be dropped.

#include <stdexcept>
#include <string>
#include <vector>

#include "padicbeta/core/padic_number.hpp"

namespace padicbeta {

namespace detail {

using Poly = std::vector<BigInt>;

inline Poly poly_mul_trunc(const Poly& a, const Poly& b, std::size_t deg_limit, const BigInt& M) {
  std::size_t n = std::min(deg_limit, a.size() + b.size() - 1);
  Poly r(n, BigInt(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& x : r) x = mod(x, M);
  return r;
}

/// P(u + h), coefficients mod M.
inline Poly taylor_shift(const Poly& a, const BigInt& h, const BigInt& M) {
  Poly r = a;
  std::size_t n = r.size();
  // Repeated synthetic division (Horner form of the shift).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) r[j - 1] = mod(r[j - 1] + h * r[j], M);
  }
  return r;
}

inline BigInt poly_eval(const Poly& a, const BigInt& u, const BigInt& M) {
  BigInt r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = mod(r * u + a[i], M);
  return r;
}

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace detail

/// Rough operation count of progression_product for a cap check.
inline double progression_cost(long p, long e, long W, long digits) {
  double total = 0;
  for (long s = 0; s < digits; ++s) {
    double d = static_cast<double>(detail::ceil_div(W, e + s));
    total += 2.0 * static_cast<double>(p) * d * d;
  }
  return total;
}

/**
 * Π_{l=0}^{n-1} (c + p^e l) modulo p^W, for e >= 1 and 0 <= n.
 */
inline BigInt progression_product(const BigInt& c, long p, long e, const BigInt& n, long W) {
  if (e < 1) throw std::invalid_argument("progression_product: step exponent must be >= 1");
  if (n < 0) throw std::invalid_argument("progression_product: negative length");
  BigInt M = ppow(p, W);
  if (n == 0) return mod(BigInt(1), M);

  std::vector<long> digits;
  for (BigInt t = n; t > 0; t /= p) digits.push_back(to_long(mod(t, BigInt(p))));

  // Block polynomials R_0 .. R_{top}.
  std::vector<detail::Poly> R;
  R.push_back(detail::Poly{mod(c, M), BigInt(1)});
  R[0].resize(std::max<std::size_t>(1, std::min<std::size_t>(2, detail::ceil_div(W, e))));
  for (std::size_t s = 0; s + 1 < digits.size(); ++s) {
    std::size_t limit = static_cast<std::size_t>(detail::ceil_div(W, e + static_cast<long>(s) + 1));
    BigInt step = ppow(p, e + static_cast<long>(s));
    detail::Poly acc{BigInt(1)};
    for (long j = 0; j < p; ++j) {
      detail::Poly shifted = detail::taylor_shift(R[s], mod(step * j, M), M);
      acc = detail::poly_mul_trunc(acc, shifted, limit, M);
    }
    R.push_back(std::move(acc));
  }

  BigInt result = 1;
  BigInt offset = 0;  // number of terms consumed so far
  for (std::size_t s = digits.size(); s-- > 0;) {
    BigInt block = ppow(p, static_cast<long>(s));
    for (long j = 0; j < digits[s]; ++j) {
      BigInt u = mod(ppow(p, e) * offset, M);
      result = mod(result * detail::poly_eval(R[s], u, M), M);
      offset += block;
    }
  }
  return result;
}

/// Reference implementation by direct multiplication; used by tests and small n.
inline BigInt progression_product_naive(const BigInt& c, long p, long e, const BigInt& n, long W) {
  BigInt M = ppow(p, W);
  BigInt step = ppow(p, e);
  BigInt r = 1;
  for (BigInt l = 0; l < n; ++l) r = mod(r * (c + step * l), M);
  return mod(r, M);
}

}  // namespace padicbeta
