#pragma once

// The scalar by which a Frobenius element τ ∈ W_p of degree d moves the
// p-adic beta period of the Fermat curve: a concrete p-adic number when p ∤ m,
// a class mod μ∞ when p | m.

#include <optional>
#include <stdexcept>
#include <variant>

#include "padicbeta/gamma/beta.hpp"

namespace padicbeta {

/// ⟨p^d r⟩ for d >= 0, the action of a degree-d Frobenius on r = i/m with p ∤ m.
inline Rational frobenius_on_fraction(long p, const Rational& r, long degree = 1) {
  if (degree < 0) throw std::domain_error("frobenius_on_fraction: degree must be >= 0");
  Rational x = frac_part(r);
  for (long k = 0; k < degree; ++k) x = frac_part(x * p);
  return x;
}

/**
 * The multiplier t of a degree-d element of W_p on μ_m when p | m. On the
 * prime-to-p part m' it is p^d mod m'; on μ_{p^k} it is any unit, pinned
 * to 1 unless an override is given (which must agree with p^d mod m').
 */
inline long bad_case_multiplier(long p, long m, long degree, std::optional<long> override_t = std::nullopt) {
  long pk = 1, mp = m;
  while (mp % p == 0) {
    mp /= p;
    pk *= p;
  }
  long base = mp == 1 ? 0 : pow_mod(degree >= 0 ? p : inverse_mod(p % mp, mp), degree >= 0 ? degree : -degree, mp);
  if (override_t) {
    long t = mod_floor(*override_t, m);
    if (gcd(t, m) != 1 || (mp > 1 && t % mp != base)) throw std::domain_error("bad_case_multiplier: override disagrees with p^d mod m'");
    return t;
  }
  return crt(1, pk, base, mp);
}

// Same shape as a pointed beta value, so class_of applies to both.
using FrobeniusFactor = std::variant<PadicNumber, UnitModRoots>;

/**
 * Good case (p ∤ m, d >= 0):
 *   Π_{k=1}^{d} (-1)^{ε_k} p^{1 - ε_{k-1}} / B_p⟨p^k i/m, p^k j/m⟩
 *   × ⟨τ(i/m) + τ(j/m)⟩^{ε(τ)} / ⟨i/m + j/m⟩^{ε},
 * with ε_k = ε(⟨p^k i/m⟩, ⟨p^k j/m⟩), returned as a p-adic number of relative
 * precision N. Bad case (p | m, p ∤ ij(i+j)): the class
 *   (d/2, log B_p(i/m, j/m) - log B_p(τ(i/m), τ(j/m))).
 */
inline FrobeniusFactor frobenius_factor(long i, long j, long m, long p, long degree, long N,
                                        std::optional<long> override_t = std::nullopt) {
  require_odd_prime(p);
  if (i <= 0 || j <= 0 || i >= m || j >= m || i + j == m)
    throw std::domain_error("frobenius_factor: need 0 < i, j < m and i + j != m");
  Rational x = make_rational(i, m), y = make_rational(j, m);
  if (m % p != 0) {
    if (degree < 0) throw std::domain_error("frobenius_factor: good case needs degree >= 0");
    PadicNumber r = PadicNumber::one(p, N);
    long shift = 0;
    for (long k = 1; k <= degree; ++k) {
      Rational xk = frobenius_on_fraction(p, x, k), yk = frobenius_on_fraction(p, y, k);
      Rational xk1 = frobenius_on_fraction(p, x, k - 1), yk1 = frobenius_on_fraction(p, y, k - 1);
      if (epsilon(xk, yk) == 1) r = -r;
      shift += 1 - epsilon(xk1, yk1);
      r = r / std::get<PadicNumber>(beta_p_pointed(xk, yk, p, N));
    }
    Rational tx = frobenius_on_fraction(p, x, degree), ty = frobenius_on_fraction(p, y, degree);
    Rational ratio = 1;
    if (epsilon(tx, ty) == 1) ratio *= frac_part(tx + ty);
    if (epsilon(x, y) == 1) ratio /= frac_part(x + y);
    return (r * PadicNumber::from_rational(ratio, p, N)).shift(shift);
  }
  if ((i % p) == 0 || (j % p) == 0 || ((i + j) % p) == 0)
    throw std::domain_error("frobenius_factor: bad case needs p not dividing i j (i + j)");
  long t = bad_case_multiplier(p, m, degree, override_t);
  Rational tx = frac_part(x * t), ty = frac_part(y * t);
  return UnitModRoots(make_rational(degree, 2), PadicNumber::exact_zero(p)) * beta_p(x, y, p, N) / beta_p(tx, ty, p, N);
}

}  // namespace padicbeta
