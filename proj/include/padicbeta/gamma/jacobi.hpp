#pragma once

// Brute-force Jacobi sums over F_p with values in Q(ζ_m), and their image in
// Z_p under the Teichmüller-compatible embedding.

#include <stdexcept>
#include <vector>

#include "padicbeta/core/padic_functions.hpp"
#include "padicbeta/cyclotomic/cyclotomic.hpp"

namespace padicbeta {

inline void require_jacobi_args(long p, long m, long i, long j) {
  require_odd_prime(p);
  if (m < 2 || (p - 1) % m != 0) throw std::domain_error("jacobi_sum: m must divide p - 1");
  if (i <= 0 || j <= 0 || i >= m || j >= m || i + j == m)
    throw std::domain_error("jacobi_sum: need 0 < i, j < m and i + j != m");
}

/**
 * J(χ^i, χ^j) = Σ_{x ≠ 0, 1} χ^i(x) χ^j(1 - x), where χ has order m and
 * χ(g) = ζ_m for g the least primitive root mod p.
 */
inline CyclotomicNumber jacobi_sum(long p, long m, long i, long j) {
  require_jacobi_args(p, m, i, j);
  long g = least_primitive_root(p);
  std::vector<long> ind(static_cast<std::size_t>(p), 0);
  long x = 1;
  for (long k = 0; k < p - 1; ++k) {
    ind[static_cast<std::size_t>(x)] = k;
    x = x * g % p;
  }
  std::vector<Rational> counts(static_cast<std::size_t>(m), Rational(0));
  for (long y = 2; y < p; ++y) {
    long e = (i * ind[static_cast<std::size_t>(y)] + j * ind[static_cast<std::size_t>(p + 1 - y)]) % m;
    counts[static_cast<std::size_t>(e)] += 1;
  }
  return CyclotomicNumber::from_power_coeffs(m, std::move(counts));
}

/// ω(g)^{(p-1)/m}: the image of ζ_m in Z_p compatible with χ(g) = ζ_m.
inline PadicNumber teichmuller_zeta(long p, long m, long absprec) {
  if ((p - 1) % m != 0) throw std::domain_error("teichmuller_zeta: m must divide p - 1");
  PadicNumber g = PadicNumber::from_integer(least_primitive_root(p), p, absprec);
  return teichmuller(g).pow((p - 1) / m);
}

/// A Q(ζ_m) element with p-integral coefficients, embedded in Z_p to absprec.
inline PadicNumber embed_in_zp(const CyclotomicNumber& x, long p, long absprec) {
  PadicNumber z = teichmuller_zeta(p, x.conductor(), absprec);
  return x.evaluate_at(z, [&](const Rational& q) { return PadicNumber::from_rational_abs(q, p, absprec); });
}

}  // namespace padicbeta
