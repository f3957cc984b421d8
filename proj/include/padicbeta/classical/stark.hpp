#pragma once

#include <numeric>
#include <stdexcept>

#include "padicbeta/classical/hurwitz.hpp"

namespace padicbeta {

/// 0 < a < m/2, gcd(a, m) = 1, m >= 3: the representatives of σ_{±a/m}.
inline void require_stark_index(long a, long m) {
  if (m < 3) throw std::domain_error("stark unit: conductor must be >= 3");
  if (a <= 0 || 2 * a >= m) throw std::domain_error("stark unit: need 0 < a < m/2");
  if (std::gcd(a, m) != 1) throw std::domain_error("stark unit: gcd(a, m) must be 1");
}

struct StarkUnitReal {
  BigReal gamma_route;  // (2π / (Γ(a/m) Γ((m-a)/m)))^2
  BigReal zeta_route;   // exp(-2 (ζ'(0,m,a) + ζ'(0,m,m-a))), ζ' by numeric differentiation

  const BigReal& value() const { return gamma_route; }
  BigReal route_gap() const { return abs(gamma_route - zeta_route); }
};

inline BigReal stark_unit_gamma_route(long a, long m, long D) {
  require_stark_index(a, m);
  mpfr_prec_t bits = digits_to_bits(D + kGuardDigits);
  BigReal lg = log_gamma_real(make_rational(a, m), D) + log_gamma_real(make_rational(m - a, m), D);
  BigReal two_pi = pi(bits) * 2;
  return exp((log(two_pi) - lg) * 2);
}

inline BigReal stark_unit_zeta_route(long a, long m, long D) {
  require_stark_index(a, m);
  BigReal zsum = hurwitz_zeta_deriv0_oracle(m, a, D) + hurwitz_zeta_deriv0_oracle(m, m - a, D);
  return exp(zsum * -2);
}

inline StarkUnitReal stark_unit_real(long a, long m, long D) {
  return {stark_unit_gamma_route(a, m, D), stark_unit_zeta_route(a, m, D)};
}

}  // namespace padicbeta
