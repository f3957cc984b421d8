#pragma once

#include <stdexcept>
#include <string>

#include "padicbeta/gamma/lgamma.hpp"
#include "padicbeta/gamma/progression_product.hpp"
#include "padicbeta/gamma/unit_mod_roots.hpp"

namespace padicbeta {

/// Default bound on the estimated operation count of a Morita/Coleman product.
inline constexpr double kDefaultProductCap = 1e7;

namespace detail {

inline void check_cap(double cost, double cap, long W) {
  if (cost > cap)
    throw std::length_error("gamma product needs about " + std::to_string(static_cast<long long>(cost)) +
                            " operations at precision " + std::to_string(W) + "; lower the precision or raise the cap");
}

}  // namespace detail

/**
 * Morita's Γ_p on Z_p: Γ_p(n) = (-1)^n Π_{k<n, p∤k} k at the representative
 * n ≡ z mod p^W, W = min(N, absprec(z)); continuity makes this Γ_p(z) mod p^W.
 */
inline PadicNumber gamma_morita(const PadicNumber& z, long N, double cap = kDefaultProductCap) {
  long p = z.prime();
  if (!z.is_zero() && z.valuation() < 0) throw std::domain_error("gamma_morita: argument not in Z_p; use gamma_ext");
  long W = std::min(N, z.absprec());
  if (W <= 0) throw std::invalid_argument("gamma_morita: no precision available");
  detail::check_cap(static_cast<double>(p - 1) * progression_cost(p, 1, W, W), cap, W);
  BigInt M = ppow(p, W);
  BigInt n = mod(z.to_integer(), M);
  BigInt result = (mod(n, BigInt(2)) == 0) ? BigInt(1) : BigInt(-1);
  for (long r = 1; r < p; ++r) {
    if (n - 1 < r) break;
    BigInt count = floor_div(n - 1 - r, BigInt(p)) + 1;
    result = mod(result * progression_product(BigInt(r), p, 1, count, W), M);
  }
  return PadicNumber::from_parts(p, mod(result, M), 0, W);
}

inline PadicNumber gamma_morita(const Rational& q, long p, long N, double cap = kDefaultProductCap) {
  if (q != 0 && ord_p(q, p) < 0) throw std::domain_error("gamma_morita: argument not in Z_p; use gamma_ext");
  return gamma_morita(PadicNumber::from_rational_abs(q, p, N), N, cap);
}

/// Extended Γ_p(z0/p^e) = exp_p(LΓ_{p,1}(z0, (p^e))) as a class mod μ∞.
inline UnitModRoots gamma_ext(const PadicNumber& z, long N) {
  if (z.is_zero() || z.valuation() >= 0) throw std::domain_error("gamma_ext: argument must lie outside Z_p");
  long e = -z.valuation();
  PadicNumber z0 = PadicNumber::from_parts(z.prime(), z.unit(), 0, z.relprec());
  return UnitModRoots::exp_extended(lgamma_series(z0, e, N).value);
}

inline UnitModRoots gamma_ext(const Rational& q, long p, long N) {
  if (q == 0 || ord_p(q, p) >= 0) throw std::domain_error("gamma_ext: argument must lie outside Z_p");
  long e = -ord_p(q, p);
  return gamma_ext(PadicNumber::from_rational(q, p, N + e + 2), N);
}

/// The part z_p of z in Z[1/p] ∩ [0,1) with z - z_p in Z_p.
inline Rational fractional_p_part(const PadicNumber& z) {
  if (z.is_zero() || z.valuation() >= 0) return 0;
  long e = -z.valuation();
  BigInt pe = ppow(z.prime(), e);
  return make_rational(mod(z.unit(), pe), pe);
}

inline Rational fractional_p_part(const Rational& q, long p) {
  if (q == 0 || ord_p(q, p) >= 0) return 0;
  long e = -ord_p(q, p);
  BigInt pe = ppow(p, e);
  // q = u / p^e with u in Z_(p); z_p = (u mod p^e) / p^e.
  Rational u = q * Rational(pe);
  BigInt r = mod(BigInt(u.get_num()) * inverse_mod(mod(BigInt(u.get_den()), pe), pe), pe);
  return make_rational(r, pe);
}

/**
 * Coleman's Γ_col(z) = lim_{n -> z_0} Π_{l<n} (z_p + l)^*, z = z_p + z_0.
 * With z_p = c/p^e the factors are (c + p^e l) ω(c)^{-1}. On Z_p this is Γ_p.
 */
inline PadicNumber gamma_coleman(const PadicNumber& z, long N, double cap = kDefaultProductCap) {
  long p = z.prime();
  if (z.is_zero() || z.valuation() >= 0) return gamma_morita(z, N, cap);
  long e = -z.valuation();
  long W = std::min(N, z.absprec());
  if (W <= 0) throw std::invalid_argument("gamma_coleman: no precision available");
  detail::check_cap(progression_cost(p, e, W, W), cap, W);
  BigInt pe = ppow(p, e);
  BigInt c = mod(z.unit(), pe);
  BigInt M = ppow(p, W);
  // z_0 = (unit - c) / p^e, known modulo p^absprec(z).
  BigInt n = mod(floor_div(z.unit() - c, pe), M);
  BigInt prod = progression_product(c, p, e, n, W);
  BigInt w = teichmuller_residue(c, p, W);
  long k = to_long(mod(n, BigInt(p - 1)));
  BigInt wk;
  mpz_powm_ui(wk.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(k), M.get_mpz_t());
  return PadicNumber::from_parts(p, mod(prod * inverse_mod(wk, M), M), 0, W);
}

inline PadicNumber gamma_coleman(const Rational& q, long p, long N, double cap = kDefaultProductCap) {
  return gamma_coleman(PadicNumber::from_rational_abs(q, p, N), N, cap);
}

}  // namespace padicbeta
