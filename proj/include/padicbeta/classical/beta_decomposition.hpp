#pragma once

// Γ(a/m) Γ((m-a)/m) raised to a power, written as a product of beta values.
// With γ(α) = Γ(α)Γ(1-α) and β(α) = (1-2α) B(α,α) B(1-α,1-α) = γ(α)^2/γ(2α),
// the products below telescope. β is 1-periodic, so every argument is taken
// in (0,1), which keeps each beta value at positive arguments.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicbeta/classical/gamma_real.hpp"
#include "padicbeta/core/number_theory.hpp"

namespace padicbeta {

struct BetaProductFactor {
  enum class Kind { Beta, Rational };
  Kind kind;
  Rational x, y;  // B(x, y) for Kind::Beta, the rational x for Kind::Rational
  long exponent;
};

struct BetaProductExpr {
  long a = 0, m = 0;
  long t = 0, m0 = 0, f = 0;  // m = 2^t m0, f = order of 2 mod m0 (0 when m0 = 1)
  long lhs_exponent = 0;      // LHS is (Γ(a/m) Γ((m-a)/m))^lhs_exponent
  std::vector<BetaProductFactor> factors;

  std::string to_string() const {
    std::string s = "(G(" + std::to_string(a) + "/" + std::to_string(m) + ")G(" + std::to_string(m - a) + "/" +
                    std::to_string(m) + "))^" + std::to_string(lhs_exponent) + " = +-";
    for (const auto& fac : factors) {
      s += " ";
      if (fac.kind == BetaProductFactor::Kind::Beta)
        s += "B(" + fac.x.get_str() + "," + fac.y.get_str() + ")";
      else
        s += "(" + fac.x.get_str() + ")";
      if (fac.exponent != 1) s += "^" + std::to_string(fac.exponent);
    }
    return s;
  }
};

namespace detail {

/// Appends β(⟨α⟩)^e as its three factors.
inline void push_beta_block(BetaProductExpr& expr, const Rational& alpha, long e) {
  Rational r = frac_part0(alpha);
  if (r == 0 || r == Rational(1, 2)) throw std::logic_error("beta block at a degenerate argument");
  expr.factors.push_back({BetaProductFactor::Kind::Rational, 1 - 2 * r, 0, e});
  expr.factors.push_back({BetaProductFactor::Kind::Beta, r, r, e});
  expr.factors.push_back({BetaProductFactor::Kind::Beta, 1 - r, 1 - r, e});
}

inline long checked_pow2(long k) {
  if (k < 0 || k > 60) throw std::overflow_error("beta product exponent too large");
  return 1L << k;
}

}  // namespace detail

inline BetaProductExpr decompose_gamma_product(long a, long m) {
  if (m < 2 || a <= 0 || a >= m) throw std::domain_error("decompose_gamma_product: need 0 < a < m");
  if (std::gcd(a, m) != 1) throw std::domain_error("decompose_gamma_product: gcd(a, m) must be 1");
  BetaProductExpr expr;
  expr.a = a;
  expr.m = m;
  expr.m0 = m;
  while (expr.m0 % 2 == 0) {
    expr.m0 /= 2;
    ++expr.t;
  }
  long t = expr.t, m0 = expr.m0;
  if (m0 == 1) {
    // m = 2^t, a odd: γ(a/2^t)^{2^{t-1}} = ± B(1/2,1/2) Π_{k=2}^t β(⟨a/2^k⟩)^{2^{k-2}}.
    expr.lhs_exponent = detail::checked_pow2(t - 1);
    expr.factors.push_back({BetaProductFactor::Kind::Beta, Rational(1, 2), Rational(1, 2), 1});
    for (long k = 2; k <= t; ++k) detail::push_beta_block(expr, make_rational(a, detail::checked_pow2(k)), detail::checked_pow2(k - 2));
    return expr;
  }
  expr.f = multiplicative_order(2, m0);
  long F = detail::checked_pow2(expr.f) - 1;
  expr.lhs_exponent = detail::checked_pow2(t) * F;
  for (long k = 1; k <= t; ++k)
    detail::push_beta_block(expr, make_rational(a, detail::checked_pow2(k) * m0), detail::checked_pow2(k - 1) * F);
  for (long l = 0; l < expr.f; ++l)
    detail::push_beta_block(expr, make_rational(detail::checked_pow2(l) * a, m0), detail::checked_pow2(expr.f - 1 - l));
  return expr;
}

struct BetaProductCheck {
  int sign;          // sign of the right-hand side; the left-hand side is positive
  BigReal residual;  // |LHS - sign RHS| / |RHS|
};

/// Evaluates both sides. Logs are summed first so that large exponents do not
/// compound rounding; the final comparison is on the values themselves.
inline BetaProductCheck verify_beta_product(const BetaProductExpr& expr, long D) {
  // Exponents reach a few thousand, so add their digit count to the guard.
  long extra = 0;
  for (const auto& f : expr.factors) extra = std::max(extra, static_cast<long>(std::to_string(std::labs(f.exponent)).size()));
  extra = std::max(extra, static_cast<long>(std::to_string(expr.lhs_exponent).size()));
  long Dw = D + extra + 5;
  mpfr_prec_t bits = digits_to_bits(Dw + kGuardDigits);

  BigReal log_lhs = (log_gamma_real(make_rational(expr.a, expr.m), Dw) +
                     log_gamma_real(make_rational(expr.m - expr.a, expr.m), Dw)) *
                    expr.lhs_exponent;
  BigReal log_rhs(0, bits);
  int sign = 1;
  for (const auto& f : expr.factors) {
    if (f.kind == BetaProductFactor::Kind::Rational) {
      if (f.x == 0) throw std::logic_error("zero rational factor");
      if (f.x < 0 && f.exponent % 2 != 0) sign = -sign;
      log_rhs += log(abs(BigReal(f.x, bits))) * f.exponent;
    } else {
      log_rhs += (log_gamma_real(f.x, Dw) + log_gamma_real(f.y, Dw) - log_gamma_real(f.x + f.y, Dw)) * f.exponent;
    }
  }
  // |LHS - sign RHS| / |RHS| with both sides positive reals: |exp(log_lhs - log_rhs) - 1|.
  BigReal residual = abs(exp(log_lhs - log_rhs) - 1);
  return {sign, residual};
}

}  // namespace padicbeta
