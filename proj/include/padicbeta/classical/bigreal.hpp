#pragma once

// Arbitrary-precision reals and complexes over MPFR. Each value carries its
// own precision; binary operations round to the larger operand precision.
// Only elementary functions (exp, log, sqrt, sin, cos) come from MPFR; π, Γ
// and ζ are computed in this library.

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

#include "padicbeta/core/rational.hpp"

namespace padicbeta {

/// Bits needed for D decimal digits, plus a small guard.
inline mpfr_prec_t digits_to_bits(long D) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(D) * 3.3219280948873623)) + 16;
}

class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits = digits_to_bits(60)) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  BigReal(long x, mpfr_prec_t bits) : BigReal(bits) { mpfr_set_si(v_, x, MPFR_RNDN); }
  BigReal(const Rational& q, mpfr_prec_t bits) : BigReal(bits) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  BigReal(const BigInt& n, mpfr_prec_t bits) : BigReal(bits) { mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN); }
  BigReal(const std::string& decimal, mpfr_prec_t bits) : BigReal(bits) {
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) throw std::invalid_argument("not a decimal: " + decimal);
  }

  static BigReal from_double(double x, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }

  BigReal(const BigReal& o) : BigReal(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigReal(BigReal&& o) noexcept : BigReal(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  /// Same value rounded to a new precision.
  BigReal with_bits(mpfr_prec_t bits) const {
    BigReal r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// log10 |x|; -inf for zero.
  double log10_abs() const {
    if (is_zero()) return -INFINITY;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
  }

  /// Fixed-point rendering with `digits` digits after the point.
  std::string to_fixed(long digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(digits), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    if (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
  }

  /// Scientific rendering with `digits` significant digits.
  std::string to_sci(long digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(std::max(1L, digits - 1)), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  BigReal operator-() const {
    BigReal r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define PADICBETA_BINOP(op, fn)                                               \
  friend BigReal operator op(const BigReal& a, const BigReal& b) {            \
    BigReal r(std::max(a.bits(), b.bits()));                                  \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                          \
    return r;                                                                 \
  }                                                                           \
  BigReal& operator op##=(const BigReal& b) { return *this = *this op b; }
  PADICBETA_BINOP(+, mpfr_add)
  PADICBETA_BINOP(-, mpfr_sub)
  PADICBETA_BINOP(*, mpfr_mul)
  PADICBETA_BINOP(/, mpfr_div)
#undef PADICBETA_BINOP

  friend BigReal operator*(const BigReal& a, long k) {
    BigReal r(a.bits());
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(const BigReal& a, long k) {
    BigReal r(a.bits());
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend BigReal operator+(const BigReal& a, long k) {
    BigReal r(a.bits());
    mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a, long k) {
    BigReal r(a.bits());
    mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

#define PADICBETA_UNARY(name, fn)                 \
  friend BigReal name(const BigReal& a) {         \
    BigReal r(a.bits());                          \
    fn(r.v_, a.v_, MPFR_RNDN);                    \
    return r;                                     \
  }
  PADICBETA_UNARY(abs, mpfr_abs)
  PADICBETA_UNARY(sqrt, mpfr_sqrt)
  PADICBETA_UNARY(exp, mpfr_exp)
  PADICBETA_UNARY(log, mpfr_log)
  PADICBETA_UNARY(sin, mpfr_sin)
  PADICBETA_UNARY(cos, mpfr_cos)
#undef PADICBETA_UNARY

  friend BigReal pow(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.bits(), b.bits()));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal pow(const BigReal& a, long k) {
    BigReal r(a.bits());
    mpfr_pow_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  /// Nearest integer.
  friend BigInt round_to_int(const BigReal& a) {
    BigReal r(a.bits());
    mpfr_round(r.v_, a.v_);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), r.v_, MPFR_RNDN);
    return z;
  }
  friend BigReal ldexp(const BigReal& a, long e) {
    BigReal r(a.bits());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_sci(20); }

 private:
  mpfr_t v_;
};

/// 10^-k at the given precision.
inline BigReal tolerance(long k, mpfr_prec_t bits) { return pow(BigReal(10, bits), -k); }

struct BigComplex {
  BigReal re, im;

  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}

  mpfr_prec_t bits() const { return std::max(re.bits(), im.bits()); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigComplex& a, const BigReal& s) { return {a.re * s, a.im * s}; }
  BigComplex conj() const { return {re, -im}; }
  BigReal norm2() const { return re * re + im * im; }
  BigReal abs() const { return sqrt(norm2()); }
};

}  // namespace padicbeta
