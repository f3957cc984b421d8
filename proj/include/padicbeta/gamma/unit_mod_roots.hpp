#pragma once

#include <ostream>
#include <string>

#include "padicbeta/core/padic_functions.hpp"

namespace padicbeta {

/**
 * A nonzero p-adic algebraic number modulo roots of unity, stored as
 * (valuation, Iwasawa log). The kernel of log_p on such numbers is generated
 * by roots of unity and rational powers of p, so the pair determines the class.
 * The group law is componentwise addition.
 */
class UnitModRoots {
 public:
  UnitModRoots(Rational valuation, PadicNumber log) : valuation_(std::move(valuation)), log_(std::move(log)) {}

  static UnitModRoots identity(long p) { return {Rational(0), PadicNumber::exact_zero(p)}; }

  /// Class of a concrete nonzero p-adic number.
  static UnitModRoots of(const PadicNumber& z) { return {Rational(z.valuation()), log_iwasawa(z)}; }

  /// Class of exp_p(z); exact for every z in Q_p since log_p exp_p(z) = z.
  static UnitModRoots exp_extended(const PadicNumber& z) { return {Rational(0), z}; }

  const Rational& valuation() const { return valuation_; }
  const PadicNumber& log() const { return log_; }
  long prime() const { return log_.prime(); }
  long absprec() const { return log_.absprec(); }

  friend UnitModRoots operator*(const UnitModRoots& a, const UnitModRoots& b) {
    return {a.valuation_ + b.valuation_, a.log_ + b.log_};
  }
  friend UnitModRoots operator/(const UnitModRoots& a, const UnitModRoots& b) {
    return {a.valuation_ - b.valuation_, a.log_ - b.log_};
  }
  UnitModRoots& operator*=(const UnitModRoots& o) { return *this = *this * o; }
  UnitModRoots& operator/=(const UnitModRoots& o) { return *this = *this / o; }

  UnitModRoots inverse() const { return {-valuation_, -log_}; }

  /// The class of x^q; well defined mod roots of unity for rational q.
  UnitModRoots pow(const Rational& q) const {
    Rational v = valuation_ * q;
    v.canonicalize();
    return {v, log_.scale(q)};
  }

  /// Equal valuation and ord_p(log difference) >= min(N, available precision).
  friend bool equal_mod(const UnitModRoots& a, const UnitModRoots& b, long N) {
    return a.valuation_ == b.valuation_ && equal_mod(a.log_, b.log_, N);
  }

  bool is_trivial(long N) const { return equal_mod(*this, identity(prime()), N); }

  /// Valuation of the log difference (the p-adic residual of a class comparison).
  friend long log_residual(const UnitModRoots& a, const UnitModRoots& b) { return diff_valuation(a.log_, b.log_); }

  std::string to_string() const { return "(val=" + valuation_.get_str() + ", log=" + log_.to_string() + ")"; }

  friend std::ostream& operator<<(std::ostream& os, const UnitModRoots& u) { return os << u.to_string(); }

 private:
  Rational valuation_;
  PadicNumber log_;
};

inline UnitModRoots exp_extended(const PadicNumber& z) { return UnitModRoots::exp_extended(z); }

}  // namespace padicbeta
