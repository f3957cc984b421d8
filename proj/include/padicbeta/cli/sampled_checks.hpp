#pragma once

// Property checks over seeded random samples. Each report draws from its own
// generator, seeded by the run seed, the check name and its parameters, so a
// report does not depend on which other reports ran or in what order.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "padicbeta/gamma/beta.hpp"
#include "padicbeta/gamma/lgamma.hpp"
#include "padicbeta/reciprocity/check_report.hpp"

namespace padicbeta::cli {

using Params = std::vector<std::pair<std::string, long>>;

inline std::mt19937_64 report_rng(std::uint64_t seed, const std::string& check, const Params& params) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (unsigned char c : check) words.push_back(c);
  for (const auto& kv : params) {
    auto v = static_cast<std::uint64_t>(kv.second);
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// num/den with |num| <= bound, 1 <= den <= bound.
inline Rational random_rational(std::mt19937_64& rng, long bound) {
  return make_rational(uniform(rng, -bound, bound), uniform(rng, 1, bound));
}

/// An integer in [1, bound] prime to p.
inline long random_unit(std::mt19937_64& rng, long p, long bound) {
  for (;;) {
    long x = uniform(rng, 1, bound);
    if (x % p != 0) return x;
  }
}

/// u / p^e with u a random unit, so the result lies outside Z_p.
inline Rational random_outside(std::mt19937_64& rng, long p, long e) {
  return make_rational(random_unit(rng, p, 1000000), to_long(ppow(p, e)));
}

/// Accumulates sample comparisons into one report whose residual is the
/// worst agreement seen, capped at the target precision.
class Tally {
 public:
  Tally(std::string check, Params params, long N) : check_(std::move(check)), params_(std::move(params)), N_(N), worst_(N) {}

  void compare(const PadicNumber& a, const PadicNumber& b, const std::string& where) {
    worst_ = std::min(worst_, std::min(N_, diff_valuation(a, b)));
    note(equal_mod(a, b, N_), where);
  }

  void compare(const UnitModRoots& a, const UnitModRoots& b, const std::string& where) {
    worst_ = std::min(worst_, std::min(N_, log_residual(a, b)));
    note(equal_mod(a, b, N_), where);
  }

  void require(bool ok, const std::string& where) { note(ok, where); }

  void set_observed(std::string s) { observed_ = std::move(s); }

  CheckReport finish(long samples) const {
    CheckReport r;
    r.check = check_;
    r.params = params_;
    r.params.emplace_back("samples", samples);
    r.residual_valuation = worst_;
    r.observed = observed_;
    r.status = failures_ == 0 ? CheckReport::Status::Pass : CheckReport::Status::Fail;
    if (failures_ > 0) r.detail = std::to_string(failures_) + " failing comparisons; first at " + first_failure_;
    return r;
  }

 private:
  void note(bool ok, const std::string& where) {
    if (ok) return;
    if (failures_++ == 0) first_failure_ = where;
  }

  std::string check_;
  Params params_;
  long N_, worst_;
  long failures_ = 0;
  std::string first_failure_, observed_;
};

namespace detail {

inline std::string str(const Rational& q) { return q.get_str(); }

inline PadicNumber unit_arg(long u, long p, long e, long N) { return PadicNumber::from_rational(u, p, N + e + 4); }

}  // namespace detail

// ---- p-adic core -------------------------------------------------------

inline CheckReport log_homomorphism(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "log-homomorphism", params);
  Tally t("log-homomorphism", params, N);
  for (long s = 0; s < samples; ++s) {
    Rational x = random_rational(rng, 100000), y = random_rational(rng, 100000);
    if (x == 0) x = 1;
    if (y == 0) y = -1;
    auto X = PadicNumber::from_rational(x, p, N), Y = PadicNumber::from_rational(y, p, N);
    t.compare(log_iwasawa(X * Y), log_iwasawa(X) + log_iwasawa(Y), detail::str(x) + ", " + detail::str(y));
  }
  return t.finish(samples);
}

inline CheckReport exp_inverts_log(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "exp-inverts-log", params);
  Tally t("exp-inverts-log", params, N);
  for (long s = 0; s < samples; ++s) {
    Rational x = make_rational(random_unit(rng, p, 100000), random_unit(rng, p, 100000));
    if (uniform(rng, 0, 1)) x = -x;
    auto X = PadicNumber::from_rational(x, p, N);
    t.compare(exp_small(log_iwasawa(X)), star(X), detail::str(x));
    auto Y = PadicNumber::from_rational_abs(x * p, p, N);
    t.compare(log_iwasawa(exp_small(Y)), Y, detail::str(x * p));
  }
  return t.finish(samples);
}

inline CheckReport teichmuller_root_of_unity(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "teichmuller-root-of-unity", params);
  Tally t("teichmuller-root-of-unity", params, N);
  for (long s = 0; s < samples; ++s) {
    long u = random_unit(rng, p, 1000000);
    auto w = teichmuller(PadicNumber::from_rational(u, p, N));
    t.compare(w.pow(p - 1), PadicNumber::one(p, N), std::to_string(u));
    t.require(mod(w.unit(), BigInt(p)) == u % p, std::to_string(u) + " residue");
  }
  return t.finish(samples);
}

inline CheckReport star_reconstructs(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "star-reconstructs", params);
  Tally t("star-reconstructs", params, N);
  for (long s = 0; s < samples; ++s) {
    Rational q = random_rational(rng, 5000);
    if (q == 0) q = 1;
    auto z = PadicNumber::from_rational(q, p, N);
    auto unitpart = PadicNumber::from_parts(p, z.unit(), 0, N);
    t.compare((teichmuller(unitpart) * star(z)).shift(z.valuation()), z, detail::str(q));
  }
  return t.finish(samples);
}

inline CheckReport exp_extended_homomorphism(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "exp-extended-homomorphism", params);
  Tally t("exp-extended-homomorphism", params, N);
  for (long s = 0; s < samples; ++s) {
    Rational x = random_rational(rng, 1000) / p, y = random_rational(rng, 1000) / (p * p);
    auto X = PadicNumber::from_rational_abs(x, p, N), Y = PadicNumber::from_rational_abs(y, p, N);
    auto lhs = exp_extended(X + Y);
    t.compare(lhs, exp_extended(X) * exp_extended(Y), detail::str(x) + ", " + detail::str(y));
    t.require(lhs.valuation() == 0, detail::str(x) + " valuation");
  }
  return t.finish(samples);
}

// ---- LΓ identities -------------------------------------------------------

/// LΓ(a) + LΓ(p^e - a) = 0.
inline CheckReport lgamma_reflection(long p, long e, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"e", e}, {"N", N}};
  auto rng = report_rng(seed, "lgamma-reflection", params);
  Tally t("lgamma-reflection", params, N);
  long pe = to_long(ppow(p, e));
  for (long s = 0; s < samples; ++s) {
    long a = random_unit(rng, p, 100000);
    auto la = lgamma_series(detail::unit_arg(a, p, e, N), e, N).value;
    auto lr = lgamma_series(detail::unit_arg(pe - a, p, e, N), e, N).value;
    t.compare(la + lr, PadicNumber::zero(p, N), std::to_string(a));
  }
  return t.finish(samples);
}

/// LΓ(a + p^e) - LΓ(a) = log_p a.
inline CheckReport lgamma_shift(long p, long e, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"e", e}, {"N", N}};
  auto rng = report_rng(seed, "lgamma-shift", params);
  Tally t("lgamma-shift", params, N);
  long pe = to_long(ppow(p, e));
  for (long s = 0; s < samples; ++s) {
    long a = random_unit(rng, p, 100000);
    auto A = detail::unit_arg(a, p, e, N);
    auto diff = lgamma_series(detail::unit_arg(a + pe, p, e, N), e, N).value - lgamma_series(A, e, N).value;
    t.compare(diff, log_iwasawa(A), std::to_string(a));
  }
  return t.finish(samples);
}

/// LΓ(ca, ca_1) = LΓ(a, a_1) + (a/a_1 - 1/2) log_p c for units c.
inline CheckReport lgamma_scaling(long p, long e, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"e", e}, {"N", N}};
  auto rng = report_rng(seed, "lgamma-scaling", params);
  Tally t("lgamma-scaling", params, N);
  long pe = to_long(ppow(p, e));
  auto a1 = PadicNumber::from_rational(pe, p, N + e + 4);
  for (long s = 0; s < samples; ++s) {
    long a = random_unit(rng, p, 100000), c = random_unit(rng, p, 1000);
    auto A = detail::unit_arg(a, p, e, N), C = detail::unit_arg(c, p, e, N);
    auto lhs = lgamma_general(A * C, a1 * C, N);
    auto b1 = PadicNumber::from_rational(make_rational(a, pe) - Rational(1, 2), p, N + 2 * e + 4);
    t.compare(lhs, lgamma_general(A, a1, N) + b1 * log_iwasawa(C), std::to_string(a) + ", c=" + std::to_string(c));
  }
  return t.finish(samples);
}

/// Ten more series terms leave LΓ unchanged mod p^N.
inline CheckReport lgamma_truncation(long p, long e, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"e", e}, {"N", N}};
  auto rng = report_rng(seed, "lgamma-truncation", params);
  Tally t("lgamma-truncation", params, N);
  for (long s = 0; s < samples; ++s) {
    long a = random_unit(rng, p, 100000);
    auto A = detail::unit_arg(a, p, e, N);
    t.compare(lgamma_series(A, e, N).value, lgamma_series(A, e, N, 10).value, std::to_string(a));
  }
  return t.finish(samples);
}

/// Valuations of LΓ - J_X at levels 1..L for one argument.
inline std::vector<long> jx_level_valuations(long a, long p, long e, long N, long L) {
  auto A = detail::unit_arg(a, p, e, N);
  auto series = lgamma_series(A, e, N).value;
  std::vector<long> v;
  for (long l = 1; l <= L; ++l) v.push_back(std::min(N, diff_valuation(series, jx_oracle(A, e, l))));
  return v;
}

/**
 * The Riemann-sum oracle at level l agrees with the series to at least
 * p^{l+1}. Level valuations are not always monotone in l (cancellation at
 * p = 3 can make a level agree better than the next); the number of samples
 * where that happens is recorded.
 */
inline CheckReport jx_oracle_convergence(long p, long e, long N, long samples, std::uint64_t seed, long levels = 4) {
  Params params{{"p", p}, {"e", e}, {"N", N}, {"levels", levels}};
  auto rng = report_rng(seed, "jx-oracle-convergence", params);
  Tally t("jx-oracle-convergence", params, N);
  long nonmonotone = 0;
  std::string first;
  for (long s = 0; s < samples; ++s) {
    long a = random_unit(rng, p, 1000000);
    auto v = jx_level_valuations(a, p, e, N, levels);
    for (long l = 1; l <= levels; ++l)
      t.require(v[static_cast<std::size_t>(l - 1)] >= std::min(N, l + 1), std::to_string(a) + " level " + std::to_string(l));
    bool mono = true;
    for (std::size_t k = 1; k < v.size(); ++k) mono = mono && v[k] >= v[k - 1];
    if (!mono && nonmonotone++ == 0) {
      first = " first a=" + std::to_string(a) + " levels";
      for (long x : v) first += " " + std::to_string(x);
    }
  }
  t.set_observed("nonmonotone=" + std::to_string(nonmonotone) + "/" + std::to_string(samples) + first);
  return t.finish(samples);
}

// ---- extended, Morita and Coleman gamma ----------------------------------------

inline CheckReport gamma_ext_shift(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "gamma-ext-shift", params);
  Tally t("gamma-ext-shift", params, N);
  for (long s = 0; s < samples; ++s) {
    long e = uniform(rng, 1, 3);
    Rational z = random_outside(rng, p, e);
    auto zstar = UnitModRoots::of(star(PadicNumber::from_rational(z, p, N + e)));
    t.compare(gamma_ext(z + 1, p, N), UnitModRoots(0, zstar.log()) * gamma_ext(z, p, N), detail::str(z));
  }
  return t.finish(samples);
}

inline CheckReport gamma_ext_reflection(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "gamma-ext-reflection", params);
  Tally t("gamma-ext-reflection", params, N);
  for (long s = 0; s < samples; ++s) {
    Rational z = random_outside(rng, p, uniform(rng, 1, 3));
    t.compare(gamma_ext(z, p, N) * gamma_ext(1 - z, p, N), UnitModRoots::identity(p), detail::str(z));
  }
  return t.finish(samples);
}

/// Γ(mz) = Π_k exp((z + k/m - 1/2) log m) Γ(z + k/m) for m prime to p.
inline CheckReport gamma_ext_multiplication(long p, long m, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"m", m}, {"N", N}};
  auto rng = report_rng(seed, "gamma-ext-multiplication", params);
  Tally t("gamma-ext-multiplication", params, N);
  for (long s = 0; s < samples; ++s) {
    long e = uniform(rng, 1, 2);
    Rational z = random_outside(rng, p, e);
    auto logm = log_iwasawa(PadicNumber::from_rational(m, p, N + 2 * e));
    auto rhs = UnitModRoots::identity(p);
    for (long k = 0; k < m; ++k) {
      Rational zk = z + make_rational(k, m);
      rhs *= exp_extended(PadicNumber::from_rational(zk - Rational(1, 2), p, N + 2 * e) * logm);
      rhs *= gamma_ext(zk, p, N);
    }
    t.compare(gamma_ext(m * z, p, N), rhs, detail::str(z));
  }
  return t.finish(samples);
}

/// Γ(pz) = Π_k Γ(z + k/p) when pz lies outside Z_p; with pz in Z_p the
/// Morita value matches the product over the k that keep z + k/p outside Z_p.
inline CheckReport gamma_ext_multiplication_by_p(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "gamma-ext-multiplication-by-p", params);
  Tally t("gamma-ext-multiplication-by-p", params, N);
  for (long s = 0; s < samples; ++s) {
    long e = uniform(rng, 1, 2);
    Rational z = random_outside(rng, p, e);
    auto rhs = UnitModRoots::identity(p);
    for (long k = 0; k < p; ++k) {
      Rational zk = z + make_rational(k, p);
      if (!in_zp(zk, p)) rhs *= gamma_ext(zk, p, N);
    }
    auto lhs = e == 1 ? UnitModRoots::of(gamma_morita(p * z, p, N)) : gamma_ext(p * z, p, N);
    t.compare(lhs, rhs, detail::str(z));
  }
  return t.finish(samples);
}

/// Γ_p(z) Γ_p(1 - z) = ±1 for z in Z_p; the sign counts are recorded.
inline CheckReport morita_reflection(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "morita-reflection", params);
  Tally t("morita-reflection", params, N);
  long plus = 0, minus = 0;
  for (long s = 0; s < samples; ++s) {
    Rational z = make_rational(uniform(rng, -100000, 100000), random_unit(rng, p, 1000));
    auto prod = gamma_morita(z, p, N) * gamma_morita(1 - z, p, N);
    int sign = prod.is_unit() && balanced(mod(prod.unit(), BigInt(p)), BigInt(p)) < 0 ? -1 : 1;
    (sign > 0 ? plus : minus)++;
    t.compare(prod, PadicNumber::from_integer(sign, p, N), detail::str(z));
  }
  t.set_observed("+1:" + std::to_string(plus) + " -1:" + std::to_string(minus));
  return t.finish(samples);
}

/// a ≡ b mod p^k implies Γ_p(a) ≡ Γ_p(b) mod p^k, for k = 1..kmax.
inline CheckReport morita_continuity(long p, long kmax, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"kmax", kmax}, {"N", N}};
  auto rng = report_rng(seed, "morita-continuity", params);
  CheckReport r;
  bool ok = true;
  long worst_margin = N;
  for (long k = 1; k <= kmax; ++k) {
    for (long s = 0; s < samples; ++s) {
      BigInt a = uniform(rng, 0, 1000000);
      BigInt b = a + ppow(p, k) * uniform(rng, -1000, 1000);
      long v = diff_valuation(gamma_morita(Rational(a), p, N), gamma_morita(Rational(b), p, N));
      worst_margin = std::min(worst_margin, std::min(N, v) - k);
      if (v < k && ok) {
        ok = false;
        r.detail = "k=" + std::to_string(k) + " a=" + a.get_str() + " b=" + b.get_str();
      }
    }
  }
  r.check = "morita-continuity";
  r.params = params;
  r.params.emplace_back("samples", samples * kmax);
  // Residual is the least excess of ord_p(Γ_p(a) - Γ_p(b)) over k.
  r.residual_valuation = worst_margin;
  r.status = ok ? CheckReport::Status::Pass : CheckReport::Status::Fail;
  return r;
}

/// Γ_col(z + 1) = z* Γ_col(z) for z outside Z_p.
inline CheckReport coleman_shift(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "coleman-shift", params);
  Tally t("coleman-shift", params, N);
  for (long s = 0; s < samples; ++s) {
    Rational z = random_outside(rng, p, uniform(rng, 1, 2));
    auto rhs = star(PadicNumber::from_rational(z, p, N + 4)) * gamma_coleman(z, p, N);
    t.compare(gamma_coleman(z + 1, p, N), rhs, detail::str(z));
  }
  return t.finish(samples);
}

/// class(Γ_col(z)) = Γ(z) / Γ(z_p) with z_p the p-power-denominator part of z.
inline CheckReport coleman_bridge(long p, long N, long samples, std::uint64_t seed) {
  Params params{{"p", p}, {"N", N}};
  auto rng = report_rng(seed, "coleman-bridge", params);
  Tally t("coleman-bridge", params, N);
  for (long s = 0; s < samples; ++s) {
    Rational z = random_outside(rng, p, uniform(rng, 1, 3));
    Rational zp = fractional_p_part(z, p);
    auto col = UnitModRoots::of(gamma_coleman(z, p, N));
    t.compare(col, gamma_ext(z, p, N) / gamma_ext(zp, p, N), detail::str(z));
  }
  return t.finish(samples);
}

}  // namespace padicbeta::cli
