#pragma once

// Exact integers and rationals (GMP-backed) plus the handful of helpers the
// rest of the library needs: p-adic order, fractional parts, parsing.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace padicbeta {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// Parses "a", "-a", "a/b".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline BigInt pow_int(long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// ord_p of a nonzero integer.
inline long ord_p(const BigInt& n, long p) {
  if (n == 0) throw std::domain_error("ord_p of zero");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), BigInt(p).get_mpz_t()));
}

inline long ord_p(const Rational& q, long p) {
  if (q == 0) throw std::domain_error("ord_p of zero");
  return ord_p(BigInt(q.get_num()), p) - ord_p(BigInt(q.get_den()), p);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

/// Nonnegative residue of n modulo m (m > 0).
inline BigInt mod(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// The fractional part in (0, 1]; integers map to 1.
inline Rational frac_part(const Rational& q) {
  Rational r = q - Rational(floor(q));
  if (r == 0) r = 1;
  return r;
}

/// The fractional part in [0, 1).
inline Rational frac_part0(const Rational& q) { return q - Rational(floor(q)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const BigInt& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + n.get_str());
  return n.get_si();
}

}  // namespace padicbeta
