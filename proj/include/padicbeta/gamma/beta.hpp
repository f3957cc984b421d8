#pragma once

#include <stdexcept>
#include <variant>

#include "padicbeta/gamma/gamma.hpp"

namespace padicbeta {

/// ε(r, s) = ⟨r⟩ + ⟨s⟩ - ⟨r + s⟩ ∈ {0, 1}.
inline int epsilon(const Rational& r, const Rational& s) {
  Rational sum = frac_part(r) + frac_part(s);
  if (is_integer(sum)) throw std::domain_error("epsilon: <r> + <s> is an integer");
  return sum < 1 ? 0 : 1;
}

/// True when q lies in Z_p (p does not divide the reduced denominator).
inline bool in_zp(const Rational& q, long p) { return q == 0 || ord_p(BigInt(q.get_den()), p) == 0; }

using PointedBeta = std::variant<PadicNumber, UnitModRoots>;

/**
 * B_p⟨α, β⟩ = Γ_p(⟨α⟩) Γ_p(⟨β⟩) / Γ_p(⟨α + β⟩). A concrete unit when all
 * three fractional parts lie in Z_p (Morita), a class mod μ∞ when all three
 * lie outside (extended Γ_p). Mixed cases are rejected.
 */
inline PointedBeta beta_p_pointed(const Rational& alpha, const Rational& beta, long p, long N) {
  require_odd_prime(p);
  Rational x = frac_part(alpha), y = frac_part(beta), w = frac_part(alpha + beta);
  bool ix = in_zp(x, p), iy = in_zp(y, p), iw = in_zp(w, p);
  if (ix && iy && iw) return gamma_morita(x, p, N) * gamma_morita(y, p, N) / gamma_morita(w, p, N);
  if (!ix && !iy && !iw) return gamma_ext(x, p, N) * gamma_ext(y, p, N) / gamma_ext(w, p, N);
  throw std::domain_error("beta_p_pointed: arguments split between Z_p and Q_p - Z_p");
}

/// The class of a pointed beta value, whichever form it came in.
inline UnitModRoots class_of(const PointedBeta& b) {
  if (auto* z = std::get_if<PadicNumber>(&b)) return UnitModRoots::of(*z);
  return std::get<UnitModRoots>(b);
}

/// B_p(α, β) = Γ_p(α) Γ_p(β) / Γ_p(α + β) for α, β, α + β outside Z_p.
inline UnitModRoots beta_p(const Rational& alpha, const Rational& beta, long p, long N) {
  require_odd_prime(p);
  if (in_zp(alpha, p) || in_zp(beta, p) || in_zp(alpha + beta, p))
    throw std::domain_error("beta_p: every argument must lie outside Z_p; use beta_p_pointed");
  return gamma_ext(alpha, p, N) * gamma_ext(beta, p, N) / gamma_ext(alpha + beta, p, N);
}

}  // namespace padicbeta
