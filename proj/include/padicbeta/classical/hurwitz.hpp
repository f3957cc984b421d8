#pragma once

#include <stdexcept>

#include "padicbeta/classical/gamma_real.hpp"

namespace padicbeta {

namespace detail {

/// H(s, x) = Σ_{n>=0} (x + n)^{-s} by Euler–Maclaurin with cutoff M.
inline BigReal hurwitz_unit_step(const BigReal& s, const BigReal& x, long M, mpfr_prec_t bits) {
  BigReal one(1, bits);
  if (!(abs(s - one) > ldexp(one, -static_cast<long>(bits) + 8))) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  BigReal sum(0, bits);
  for (long n = 0; n < M; ++n) sum += exp(-s * log(x + n));
  BigReal y = x + M;
  BigReal logy = log(y);
  BigReal y_s = exp(-s * logy);  // y^{-s}
  sum += y * y_s / (s - one);
  sum += y_s / 2;
  // Σ_k B_{2k}/(2k)! (s)_{2k-1} y^{-s-2k+1}
  BigReal eps = ldexp(one, -static_cast<long>(bits) - 2);
  BigReal rising = s;      // (s)_{2k-1}
  BigReal ypow = y_s / y;  // y^{-s-2k+1}
  BigReal y2 = y * y;
  BigInt fact = 2;  // (2k)!
  BigReal previous(0, bits);
  for (long k = 1;; ++k) {
    BigReal term = BigReal(bernoulli(static_cast<std::size_t>(2 * k)) / Rational(fact), bits) * rising * ypow;
    BigReal size = abs(term);
    if (size < eps * abs(sum) || term.is_zero()) break;
    if (k > 2 && size > previous) throw std::logic_error("Euler-Maclaurin tail diverged; raise the cutoff");
    sum += term;
    previous = size;
    rising = rising * (s + (2 * k - 1)) * (s + 2 * k);
    ypow = ypow / y2;
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return sum;
}

}  // namespace detail

/// ζ(s, v, z) = Σ_{n>=0} (z + v n)^{-s} = v^{-s} H(s, z/v), for s != 1.
inline BigReal hurwitz_zeta(const BigReal& s, const Rational& v, const Rational& z, long D) {
  if (v <= 0 || z <= 0) throw std::domain_error("hurwitz_zeta: v and z must be positive");
  mpfr_prec_t bits = std::max(s.bits(), digits_to_bits(D + kGuardDigits));
  long M = std::max(10L, D + kGuardDigits);
  BigReal sb = s.with_bits(bits);
  BigReal h = detail::hurwitz_unit_step(sb, BigReal(z / v, bits), M, bits);
  return exp(-sb * log(BigReal(v, bits))) * h;
}

inline BigReal hurwitz_zeta(const Rational& s, const Rational& v, const Rational& z, long D) {
  return hurwitz_zeta(BigReal(s, digits_to_bits(D + kGuardDigits)), v, z, D);
}

struct ZetaDerivative {
  BigReal closed_form;  // log Γ(a/m) - ½ log 2π - ζ(0, m, a) log m
  BigReal oracle;       // Richardson-extrapolated central differences
};

/// Closed form of ζ'(0, m, a) from the Lerch-type formula.
inline BigReal hurwitz_zeta_deriv0_closed(long m, long a, long D) {
  mpfr_prec_t bits = digits_to_bits(D + kGuardDigits);
  Rational q = make_rational(a, m);
  Rational z0 = Rational(1, 2) - q;
  return log_gamma_real(q, D) - log(pi(bits) * 2) / 2 - BigReal(z0, bits) * log(BigReal(m, bits));
}

/// ζ'(0, m, a) by central differences at s = ±h, h = 10^{-D/4}, three
/// Richardson levels (h, h/2, h/4). Independent of Γ.
inline BigReal hurwitz_zeta_deriv0_oracle(long m, long a, long D) {
  // The differences cancel about D/4 digits, so evaluate ζ with that many extra.
  long Dw = D + D / 4 + kGuardDigits;
  mpfr_prec_t bits = digits_to_bits(Dw + kGuardDigits);
  Rational v(m), z(a);
  BigReal h = pow(BigReal(10, bits), -(D / 4));
  BigReal d[3] = {BigReal(bits), BigReal(bits), BigReal(bits)};
  for (int i = 0; i < 3; ++i) {
    BigReal hi = ldexp(h, -i);
    d[i] = (hurwitz_zeta(hi, v, z, Dw) - hurwitz_zeta(-hi, v, z, Dw)) / (hi * 2);
  }
  // Error expansion in even powers of h: eliminate h^2 then h^4.
  BigReal r1a = (d[1] * 4 - d[0]) / 3;
  BigReal r1b = (d[2] * 4 - d[1]) / 3;
  return (r1b * 16 - r1a) / 15;
}

inline ZetaDerivative hurwitz_zeta_deriv0(long m, long a, long D) {
  if (m < 1 || a < 1 || a > m) throw std::domain_error("hurwitz_zeta_deriv0: need 0 < a <= m");
  return {hurwitz_zeta_deriv0_closed(m, a, D), hurwitz_zeta_deriv0_oracle(m, a, D)};
}

}  // namespace padicbeta
