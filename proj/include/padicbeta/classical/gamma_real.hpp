#pragma once

#include <map>
#include <mutex>
#include <stdexcept>

#include "padicbeta/classical/bigreal.hpp"
#include "padicbeta/core/bernoulli.hpp"

namespace padicbeta {

/// Guard digits carried internally by the classical routines.
inline constexpr long kGuardDigits = 15;

namespace detail {

/// arctan(1/n) = Σ (-1)^k / ((2k+1) n^{2k+1}).
inline BigReal arctan_inverse(long n, mpfr_prec_t bits) {
  BigReal sum(0, bits);
  BigReal power = BigReal(1, bits) / n;  // 1/n^{2k+1}
  BigReal eps = ldexp(BigReal(1, bits), -static_cast<long>(bits) - 4);
  long n2 = n * n;
  for (long k = 0;; ++k) {
    BigReal term = power / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    if (term < eps) break;
    power = power / n2;
  }
  return sum;
}

}  // namespace detail

/// π = 16 arctan(1/5) - 4 arctan(1/239), cached per precision.
inline BigReal pi(mpfr_prec_t bits) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, BigReal> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  mpfr_prec_t work = bits + 32;
  BigReal v = (detail::arctan_inverse(5, work) * 16 - detail::arctan_inverse(239, work) * 4).with_bits(bits);
  cache.emplace(bits, v);
  return v;
}

namespace detail {

/// Stirling series for log Γ(x), x >= threshold, error below 2^-bits.
inline BigReal log_gamma_stirling(const BigReal& x, mpfr_prec_t bits) {
  BigReal half_log_2pi = log(pi(bits) * 2) / 2;
  BigReal result = (x - BigReal(Rational(1, 2), bits)) * log(x) - x + half_log_2pi;
  BigReal eps = ldexp(BigReal(1, bits), -static_cast<long>(bits) - 2);
  BigReal x2 = x * x;
  BigReal xpow = x;  // x^{2k-1}
  BigReal previous = BigReal(1, bits);
  bool first = true;
  for (std::size_t k = 1;; ++k) {
    Rational coeff = bernoulli(2 * k) / Rational(static_cast<long>(2 * k * (2 * k - 1)));
    BigReal term = BigReal(coeff, bits) / xpow;
    BigReal size = abs(term);
    // For real x the remainder is bounded by the first omitted term.
    if (size < eps) break;
    if (!first && size > previous) throw std::logic_error("Stirling series diverged before reaching precision");
    result += term;
    previous = size;
    first = false;
    xpow *= x2;
  }
  return result;
}

inline long stirling_threshold(long D) { return std::max(10L, (D + kGuardDigits) / 2); }

}  // namespace detail

/// log Γ(q) for rational q > 0, at D digits plus guard.
inline BigReal log_gamma_real(const Rational& q, long D) {
  if (q <= 0) throw std::domain_error("gamma_real: argument must be positive");
  mpfr_prec_t bits = digits_to_bits(D + kGuardDigits);
  long threshold = detail::stirling_threshold(D);
  // Γ(q) = Γ(q + n) / (q (q+1) ... (q+n-1)), the product taken exactly.
  Rational shifted = q;
  Rational product = 1;
  while (shifted < threshold) {
    product *= shifted;
    shifted += 1;
  }
  return detail::log_gamma_stirling(BigReal(shifted, bits), bits) - log(BigReal(product, bits));
}

/// Γ(q) for rational q > 0.
inline BigReal gamma_real(const Rational& q, long D) {
  if (q <= 0) throw std::domain_error("gamma_real: argument must be positive");
  if (is_integer(q) && q < 1000) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), to_long(BigInt(q.get_num())) - 1);
    return BigReal(f, digits_to_bits(D + kGuardDigits));
  }
  return exp(log_gamma_real(q, D));
}

/// B(α, β) = Γ(α) Γ(β) / Γ(α + β).
inline BigReal beta_real(const Rational& alpha, const Rational& beta, long D) {
  if (alpha <= 0 || beta <= 0) throw std::domain_error("beta_real: arguments must be positive");
  return exp(log_gamma_real(alpha, D) + log_gamma_real(beta, D) - log_gamma_real(alpha + beta, D));
}

}  // namespace padicbeta
