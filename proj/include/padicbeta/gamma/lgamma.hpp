#pragma once

// The LΓ_{p,1} series: the Volkenborn-style integral J_X of
//   f_{a,a1}(X) = -((a1 X + a)/a1) (1 - log_p(a1 X + a)),
// expanded through log(1 + y) with y = ω(a)^{-1}(a1 X + a) - 1 and
// J_X((a1 X + a)^n) = a1^n B_n(a/a1).

#include <stdexcept>
#include <vector>

#include "padicbeta/core/bernoulli.hpp"
#include "padicbeta/core/padic_functions.hpp"

namespace padicbeta {

struct LGammaValue {
  PadicNumber a;
  long e = 0;
  PadicNumber value;
};

namespace detail {

/// Smallest K with k - ord_p(k) - e - 1 >= N for every k > K.
inline long lgamma_terms(long p, long e, long N) {
  // k - ord_p(k) is nondecreasing past the first failure point for odd p, so
  // scanning a window of p^2 terms beyond the last failure is enough.
  long K = 0;
  long last_bad = 0;
  for (long k = 1; k <= last_bad + p * p + 2; ++k) {
    if (k - ord_p_long(k, p) - e - 1 < N) last_bad = k;
  }
  K = last_bad;
  return K;
}

}  // namespace detail

/**
 * LΓ_{p,1}(a, (a1)) for a unit a and a1 in pZ_p (general a1, used for the
 * scaling identity). The result is known modulo p^min(N, absprec(a) - v(a1)).
 * `extra_terms` adds terms beyond the truncation bound (for soundness tests).
 */
inline PadicNumber lgamma_general(const PadicNumber& a, const PadicNumber& a1, long N, long extra_terms = 0) {
  long p = a.prime();
  if (!a.is_unit()) throw std::domain_error("lgamma: a must be a p-adic unit");
  if (a1.is_zero() || a1.valuation() < 1) throw std::domain_error("lgamma: a1 must be a nonzero element of pZ_p");
  if (N <= 0) throw std::invalid_argument("lgamma: precision must be positive");
  long e = a1.valuation();
  long K = detail::lgamma_terms(p, e, N) + extra_terms;
  long guard = floor_log(std::max(K, 1L), p) + 2;
  long R = N + e + 1 + guard;  // relative working precision for every constant

  PadicNumber A = a.reduce_to(R);
  PadicNumber A1 = a1.reduce_to(e + R);
  PadicNumber w_inv = teichmuller(A, R).inverse();
  auto exact = [&](const Rational& q) { return q == 0 ? PadicNumber::exact_zero(p) : PadicNumber::from_rational(q, p, R); };

  auto bern = BernoulliCache::shared().upto(static_cast<std::size_t>(K) + 2);

  // Powers of a and a1 (a1^{-1} included as index -1 via shift).
  std::vector<PadicNumber> apow{PadicNumber::one(p, R)};
  for (long i = 1; i <= K + 1; ++i) apow.push_back(apow.back() * A);
  std::vector<PadicNumber> a1pow{PadicNumber::one(p, R)};
  for (long i = 1; i <= K + 1; ++i) a1pow.push_back(a1pow.back() * A1);
  PadicNumber a1_inv = A1.inverse();

  // c_l = ω(a)^{-l} a1^l B_{l+1}(a/a1) = ω(a)^{-l} Σ_j C(l+1, j) B_j a^{l+1-j} a1^{j-1}.
  std::vector<PadicNumber> c;
  PadicNumber wpow = PadicNumber::one(p, R);
  for (long l = 0; l <= K; ++l) {
    PadicNumber b = PadicNumber::exact_zero(p);
    for (long j = 0; j <= l + 1; ++j) {
      const Rational& Bj = bern[static_cast<std::size_t>(j)];
      if (Bj == 0) continue;
      PadicNumber term = exact(Rational(binomial(static_cast<unsigned long>(l + 1), static_cast<unsigned long>(j))) * Bj) *
                         apow[static_cast<std::size_t>(l + 1 - j)];
      term *= (j == 0) ? a1_inv : a1pow[static_cast<std::size_t>(j - 1)];
      b += term;
    }
    c.push_back(b * wpow);
    wpow *= w_inv;
  }

  PadicNumber value = -c[0];
  for (long k = 1; k <= K; ++k) {
    PadicNumber delta = PadicNumber::exact_zero(p);
    for (long l = 0; l <= k; ++l) {
      Rational coeff(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(l)));
      if ((k - l) % 2 == 1) coeff = -coeff;
      delta += c[static_cast<std::size_t>(l)].scale(coeff);
    }
    Rational outer(k % 2 == 0 ? -1 : 1, k);  // -(-1)^k / k
    value += delta.scale(outer);
  }
  return value.reduce_to(N);
}

/// LΓ_{p,1}(a, (p^e)).
inline LGammaValue lgamma_series(const PadicNumber& a, long e, long N, long extra_terms = 0) {
  if (e < 1) throw std::invalid_argument("lgamma: e must be >= 1");
  PadicNumber a1 = PadicNumber::one(a.prime(), N + e + 64).shift(e);
  return {a, e, lgamma_general(a, a1, N, extra_terms)};
}

/**
 * Brute-force approximant (1/p^l) Σ_{n<p^l} f_{a,p^e}(n) of the same integral.
 */
inline PadicNumber jx_oracle(const PadicNumber& a, long e, long level) {
  long p = a.prime();
  if (!a.is_unit()) throw std::domain_error("jx_oracle: a must be a p-adic unit");
  if (level < 1) throw std::invalid_argument("jx_oracle: level must be >= 1");
  BigInt count = ppow(p, level);
  if (count > 1000000) throw std::invalid_argument("jx_oracle: p^level exceeds 10^6");
  long A = a.absprec();
  PadicNumber sum = PadicNumber::exact_zero(p);
  BigInt step = ppow(p, e);
  PadicNumber one = PadicNumber::one(p, A);
  for (BigInt n = 0; n < count; ++n) {
    PadicNumber x = a + PadicNumber::from_integer(step * n, p, A);  // a1 n + a
    sum += x * (log_iwasawa(x) - one);
  }
  // f(n) = (x/a1)(log x - 1); the outer 1/p^l and 1/a1 are exact shifts.
  return sum.shift(-e - level);
}

/// (1/p^l) Σ_{n<p^l} n^k; tends to B_k(0) as l grows.
inline Rational riemann_sum_monomial(long p, long level, long k) {
  BigInt count = ppow(p, level);
  BigInt s = 0;
  for (BigInt n = 0; n < count; ++n) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    s += t;
  }
  return make_rational(s, count);
}

}  // namespace padicbeta
