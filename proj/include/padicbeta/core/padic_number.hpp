#pragma once

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "padicbeta/core/number_theory.hpp"
#include "padicbeta/core/rational.hpp"

namespace padicbeta {

inline constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

inline BigInt ppow(long p, long k) {
  if (k < 0) throw std::domain_error("negative p-power exponent");
  return pow_int(p, static_cast<unsigned long>(k));
}

/// Inverse of a unit modulo `modulus`.
inline BigInt inverse_mod(const BigInt& a, const BigInt& modulus) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return r;
}

/// Balanced representative of x mod m, in (-m/2, m/2].
inline BigInt balanced(const BigInt& x, const BigInt& m) {
  BigInt r = mod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

/**
 * An element of Q_p known modulo p^absprec.
 *
 * Stored as unit * p^val with the unit reduced modulo p^(absprec - val).
 * A value indistinguishable from zero at its precision has unit 0 and
 * val = absprec; the exact zero has val = absprec = kInfinity.
 */
class PadicNumber {
 public:
  PadicNumber() = default;

  static PadicNumber exact_zero(long p) {
    require_odd_prime(p);
    PadicNumber z;
    z.p_ = p;
    z.val_ = kInfinity;
    z.absprec_ = kInfinity;
    z.unit_ = 0;
    return z;
  }

  /// Zero known only modulo p^absprec.
  static PadicNumber zero(long p, long absprec) {
    require_odd_prime(p);
    PadicNumber z;
    z.p_ = p;
    z.val_ = absprec;
    z.absprec_ = absprec;
    z.unit_ = 0;
    return z;
  }

  /// q to relative precision N: the result is known modulo p^(ord_p(q) + N).
  static PadicNumber from_rational(const Rational& q, long p, long N) {
    require_odd_prime(p);
    if (N <= 0) throw std::invalid_argument("precision must be positive");
    if (q == 0) return exact_zero(p);
    return from_rational_abs(q, p, ord_p(q, p) + N);
  }

  /// q to absolute precision: the result is known modulo p^absprec.
  static PadicNumber from_rational_abs(const Rational& q, long p, long absprec) {
    require_odd_prime(p);
    if (q == 0) return zero(p, absprec);
    long v = ord_p(q, p);
    if (v >= absprec) return zero(p, absprec);
    BigInt num = q.get_num(), den = q.get_den();
    BigInt pp(p);
    mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    BigInt m = ppow(p, absprec - v);
    PadicNumber z;
    z.p_ = p;
    z.val_ = v;
    z.absprec_ = absprec;
    z.unit_ = mod(num * inverse_mod(mod(den, m), m), m);
    return z;
  }

  static PadicNumber one(long p, long absprec) { return from_parts(p, 1, 0, absprec); }

  static PadicNumber from_integer(const BigInt& n, long p, long absprec) {
    return from_rational_abs(Rational(n), p, absprec);
  }

  static PadicNumber from_integer(long n, long p, long absprec) {
    return from_integer(BigInt(n), p, absprec);
  }

  /// Builds unit * p^val + O(p^absprec), normalizing any p-factors in `unit`.
  static PadicNumber from_parts(long p, const BigInt& unit, long val, long absprec) {
    PadicNumber z;
    z.p_ = p;
    z.absprec_ = absprec;
    z.val_ = val;
    z.unit_ = unit;
    z.normalize();
    return z;
  }

  long prime() const { return p_; }
  long valuation() const { return val_; }
  long absprec() const { return absprec_; }
  long relprec() const { return is_exact_zero() ? kInfinity : absprec_ - val_; }
  const BigInt& unit() const { return unit_; }

  bool is_exact_zero() const { return absprec_ == kInfinity; }
  bool is_zero() const { return unit_ == 0; }
  bool is_unit() const { return !is_zero() && val_ == 0; }
  bool is_integral() const { return val_ >= 0; }

  /// Integer representative in [0, p^absprec) for integral values.
  BigInt to_integer() const {
    if (is_zero()) return 0;
    if (val_ < 0) throw std::domain_error("to_integer: value not in Z_p");
    return unit_ * ppow(p_, val_);
  }

  /// Rational representative unit * p^val (unit taken in [0, p^relprec)).
  Rational to_rational() const {
    if (is_zero()) return 0;
    if (val_ >= 0) return Rational(to_integer());
    return make_rational(unit_, ppow(p_, -val_));
  }

  /// Drops precision to min(absprec, target).
  PadicNumber reduce_to(long target) const {
    if (target >= absprec_) return *this;
    if (is_exact_zero()) return zero(p_, target);
    return from_parts(p_, unit_, val_, target);
  }

  /// Treats the stored representative as exact up to `target` (target >= absprec).
  /// Only meaningful when the caller knows the extra digits are zero.
  PadicNumber lift_to(long target) const {
    if (is_exact_zero() || target <= absprec_) return reduce_to(target);
    PadicNumber z = *this;
    if (z.is_zero()) {
      z.val_ = target;
    }
    z.absprec_ = target;
    return z;
  }

  /// Multiplies by p^k exactly.
  PadicNumber shift(long k) const {
    if (is_exact_zero()) return *this;
    PadicNumber z = *this;
    z.val_ += k;
    z.absprec_ += k;
    return z;
  }

  PadicNumber operator-() const {
    if (is_zero()) return *this;
    PadicNumber z = *this;
    z.unit_ = mod(-unit_, ppow(p_, absprec_ - val_));
    return z;
  }

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    check_same_prime(a, b);
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    long A = std::min(a.absprec_, b.absprec_);
    long v0 = std::min(a.val_, b.val_);
    if (v0 >= A) return zero(a.p_, A);
    BigInt s = 0;
    if (!a.is_zero() && a.val_ < A) s += a.unit_ * ppow(a.p_, a.val_ - v0);
    if (!b.is_zero() && b.val_ < A) s += b.unit_ * ppow(a.p_, b.val_ - v0);
    return from_parts(a.p_, mod(s, ppow(a.p_, A - v0)), v0, A);
  }

  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    check_same_prime(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return exact_zero(a.p_);
    if (a.is_zero() || b.is_zero()) {
      // O(p^A) * w with w of valuation v gives O(p^(A+v)).
      long A = std::min(a.is_zero() ? a.absprec_ + b.val_ : kInfinity,
                        b.is_zero() ? b.absprec_ + a.val_ : kInfinity);
      if (a.is_zero() && b.is_zero()) A = a.absprec_ + b.absprec_;
      return zero(a.p_, A);
    }
    long rel = std::min(a.relprec(), b.relprec());
    long v = a.val_ + b.val_;
    return from_parts(a.p_, mod(a.unit_ * b.unit_, ppow(a.p_, rel)), v, v + rel);
  }

  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    check_same_prime(a, b);
    if (b.is_zero()) throw std::domain_error("p-adic division by zero");
    if (a.is_exact_zero()) return a;
    if (a.is_zero()) return zero(a.p_, a.absprec_ - b.val_);
    long rel = std::min(a.relprec(), b.relprec());
    BigInt m = ppow(a.p_, rel);
    long v = a.val_ - b.val_;
    return from_parts(a.p_, mod(a.unit_ * inverse_mod(mod(b.unit_, m), m), m), v, v + rel);
  }

  PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
  PadicNumber& operator-=(const PadicNumber& o) { return *this = *this - o; }
  PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }
  PadicNumber& operator/=(const PadicNumber& o) { return *this = *this / o; }

  PadicNumber inverse() const {
    if (is_zero()) throw std::domain_error("p-adic inverse of zero");
    long rel = relprec();
    return from_parts(p_, inverse_mod(unit_, ppow(p_, rel)), -val_, -val_ + rel);
  }

  /// Nonzero values only for k <= 0.
  PadicNumber pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (is_zero()) {
      if (k == 0) throw std::domain_error("p-adic 0^0");
      return is_exact_zero() ? *this : zero(p_, absprec_ * k);
    }
    long rel = relprec();
    BigInt m = ppow(p_, rel), r;
    mpz_powm_ui(r.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(k), m.get_mpz_t());
    return from_parts(p_, r, val_ * k, val_ * k + rel);
  }

  /// Times an exact rational.
  PadicNumber scale(const Rational& q) const {
    if (q == 0) return exact_zero(p_);
    long rel = relprec();
    if (is_zero()) return zero(p_, absprec_ + ord_p(q, p_));
    return *this * from_rational(q, p_, rel);
  }

  /// ord_p(a - b), capped at the common absolute precision.
  friend long diff_valuation(const PadicNumber& a, const PadicNumber& b) {
    PadicNumber d = a - b;
    return d.is_zero() ? d.absprec_ : d.val_;
  }

  /// Equality modulo p^N (and within the available precision).
  friend bool equal_mod(const PadicNumber& a, const PadicNumber& b, long N) {
    return diff_valuation(a, b) >= std::min(N, std::min(a.absprec_, b.absprec_));
  }

  /// The representative unit balanced into (-p^r/2, p^r/2].
  BigInt balanced_unit() const {
    if (is_zero()) return 0;
    return balanced(unit_, ppow(p_, relprec()));
  }

  /// "u*p^v + O(p^M)" with u balanced; "u + O(p^M)" when v = 0.
  std::string to_string() const {
    std::string P = std::to_string(p_);
    if (is_exact_zero()) return "0";
    if (is_zero()) return "O(" + P + "^" + std::to_string(absprec_) + ")";
    std::string u = balanced_unit().get_str();
    std::string head = val_ == 0 ? u : u + "*" + P + "^" + std::to_string(val_);
    return head + " + O(" + P + "^" + std::to_string(absprec_) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const PadicNumber& z) { return os << z.to_string(); }

 private:
  static void check_same_prime(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("p-adic operands over different primes");
  }

  void normalize() {
    if (absprec_ == kInfinity) return;
    if (unit_ != 0) {
      BigInt pp(p_);
      long k = static_cast<long>(mpz_remove(unit_.get_mpz_t(), unit_.get_mpz_t(), pp.get_mpz_t()));
      val_ += k;
    }
    if (unit_ == 0 || val_ >= absprec_) {
      unit_ = 0;
      val_ = absprec_;
      return;
    }
    unit_ = mod(unit_, ppow(p_, absprec_ - val_));
  }

  long p_ = 3;
  long val_ = kInfinity;
  long absprec_ = kInfinity;
  BigInt unit_ = 0;
};

}  // namespace padicbeta
