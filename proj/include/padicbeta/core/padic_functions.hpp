#pragma once

#include <stdexcept>

#include "padicbeta/core/padic_number.hpp"

namespace padicbeta {

/// Teichmüller lift of a residue r (p ∤ r) modulo p^absprec.
inline BigInt teichmuller_residue(const BigInt& r, long p, long absprec) {
  BigInt m = ppow(p, absprec);
  BigInt x = mod(r, m);
  if (mod(x, BigInt(p)) == 0) throw std::domain_error("teichmuller: argument is not a unit");
  BigInt pp(p);
  for (;;) {
    BigInt y;
    mpz_powm(y.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t(), m.get_mpz_t());
    if (y == x) return x;
    x = y;
  }
}

/// ω(z) for a unit z. Since ω(z) only depends on z mod p, the result can be
/// requested at any precision; by default it matches z.
inline PadicNumber teichmuller(const PadicNumber& z, long absprec = 0) {
  if (!z.is_unit()) throw std::domain_error("teichmuller: argument is not a unit");
  long A = absprec > 0 ? absprec : z.absprec();
  return PadicNumber::from_parts(z.prime(), teichmuller_residue(z.unit(), z.prime(), A), 0, A);
}

/// z* = z ω(z p^-v)^-1 p^-v, a principal unit known to the relative precision of z.
inline PadicNumber star(const PadicNumber& z) {
  if (z.is_zero()) throw std::domain_error("star: argument is zero");
  long p = z.prime();
  long rel = z.relprec();
  BigInt m = ppow(p, rel);
  BigInt w = teichmuller_residue(z.unit(), p, rel);
  return PadicNumber::from_parts(p, mod(z.unit() * inverse_mod(w, m), m), 0, rel);
}

namespace detail {

/// Largest ord_p(k) over 1 <= k <= K.
inline long max_ord_upto(long K, long p) { return floor_log(K, p); }

}  // namespace detail

/// Σ_{k>=1} (-1)^{k+1} y^k / k for y in pZ_p, modulo p^absprec of y.
inline PadicNumber log_one_plus(const PadicNumber& y) {
  long p = y.prime();
  if (y.is_exact_zero()) return y;
  long A = y.absprec();
  if (y.is_zero()) return PadicNumber::zero(p, A);
  if (y.valuation() < 1) throw std::domain_error("log_one_plus: argument not in pZ_p");
  if (A <= 0) return PadicNumber::zero(p, A);
  long v = y.valuation();
  // Dropped terms have valuation >= k v - ord_p(k) >= k - log_p k.
  long K = 1;
  while ((K + 1) * v - floor_log(K + 1, p) < A) ++K;
  long g = detail::max_ord_upto(K, p);
  BigInt M = ppow(p, A + g);
  BigInt Y = y.to_integer();
  BigInt Yk = 1, sum = 0;
  BigInt pp(p);
  for (long k = 1; k <= K; ++k) {
    Yk = mod(Yk * Y, M);
    long o = ord_p_long(k, p);
    BigInt num = Yk;
    BigInt pk = ppow(p, o);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pk.get_mpz_t());
    long ku = k;
    for (long i = 0; i < o; ++i) ku /= p;
    BigInt term = num * inverse_mod(BigInt(ku), M);
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return PadicNumber::from_parts(p, mod(sum, ppow(p, A)), 0, A);
}

/// Iwasawa logarithm: log_p(p) = 0 and log_p vanishes on roots of unity.
inline PadicNumber log_iwasawa(const PadicNumber& z) {
  if (z.is_zero()) throw std::domain_error("log_iwasawa: argument is zero");
  PadicNumber s = star(z);
  return log_one_plus(s - PadicNumber::one(z.prime(), s.absprec()));
}

/// Σ z^n/n! for v(z) >= 1, modulo p^absprec of z.
inline PadicNumber exp_small(const PadicNumber& z) {
  long p = z.prime();
  if (z.is_exact_zero()) return PadicNumber::one(p, kInfinity / 4);
  long A = z.absprec();
  if (A <= 0) return PadicNumber::zero(p, A);
  if (z.is_zero()) return PadicNumber::one(p, A);
  if (z.valuation() < 1) throw std::domain_error("exp_small: argument outside pZ_p; use exp_extended");
  long v = z.valuation();
  // ord_p(n!) <= (n-1)/(p-1), so term n has valuation >= n v - (n-1)/(p-1).
  auto bound = [&](long n) { return n * v - (n - 1) / (p - 1); };
  long nmax = 1;
  while (bound(nmax + 1) < A) ++nmax;
  long g = 0;
  for (long n = 1; n <= nmax; ++n) g += ord_p_long(n, p);
  BigInt M = ppow(p, A + g);
  BigInt Z = z.to_integer();
  BigInt zn = 1, fact_unit = 1, sum = 1;
  long fact_ord = 0;
  for (long n = 1; n <= nmax; ++n) {
    zn = mod(zn * Z, M);
    long o = ord_p_long(n, p);
    long nu = n;
    for (long i = 0; i < o; ++i) nu /= p;
    fact_ord += o;
    fact_unit = mod(fact_unit * nu, M);
    BigInt num = zn;
    BigInt pk = ppow(p, fact_ord);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pk.get_mpz_t());
    sum += num * inverse_mod(fact_unit, M);
  }
  return PadicNumber::from_parts(p, mod(sum, ppow(p, A)), 0, A);
}

}  // namespace padicbeta
