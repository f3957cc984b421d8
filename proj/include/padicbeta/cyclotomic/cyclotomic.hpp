#pragma once

// Exact arithmetic in Q(ζ_m) in the power basis modulo the m-th cyclotomic
// polynomial.

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicbeta/classical/gamma_real.hpp"
#include "padicbeta/core/intpoly.hpp"
#include "padicbeta/core/linalg.hpp"
#include "padicbeta/core/number_theory.hpp"

namespace padicbeta {

namespace detail {

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Exact quotient by a monic divisor.
inline std::vector<BigInt> poly_divexact_monic(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  std::size_t db = b.size() - 1;
  std::vector<BigInt> q(a.size() - db, BigInt(0));
  for (std::size_t i = a.size(); i-- > db;) {
    BigInt c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("poly_divexact_monic: nonzero remainder");
  return q;
}

inline std::vector<BigInt> x_pow_minus_one(long d) {
  std::vector<BigInt> r(static_cast<std::size_t>(d + 1), BigInt(0));
  r[0] = -1;
  r.back() = 1;
  return r;
}

/// Φ_m = Π_{d | m} (x^d - 1)^{μ(m/d)}.
inline std::vector<BigInt> compute_cyclotomic_polynomial(long m) {
  std::vector<BigInt> num{BigInt(1)}, den{BigInt(1)};
  for (long d : divisors(m)) {
    int mu = mobius(m / d);
    if (mu == 1) num = poly_mul(num, x_pow_minus_one(d));
    if (mu == -1) den = poly_mul(den, x_pow_minus_one(d));
  }
  return poly_divexact_monic(num, den);
}

}  // namespace detail

/// Φ_m, coefficients from the constant term up; computed once per conductor.
inline const std::vector<BigInt>& cyclotomic_polynomial(long m) {
  if (m < 1) throw std::domain_error("cyclotomic_polynomial: conductor must be positive");
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const std::vector<BigInt>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end())
    it = cache.emplace(m, std::make_shared<const std::vector<BigInt>>(detail::compute_cyclotomic_polynomial(m))).first;
  return *it->second;
}

class CyclotomicNumber {
 public:
  /// The rational q in Q(ζ_m).
  CyclotomicNumber(long m, const Rational& q) : m_(m), c_(static_cast<std::size_t>(euler_phi(check(m))), Rational(0)) {
    c_[0] = q;
  }

  /// ζ_m^k.
  static CyclotomicNumber zeta(long m, long k) {
    std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
    v[static_cast<std::size_t>(mod_floor(k, m))] = 1;
    return from_power_coeffs(m, v);
  }

  /// Σ v_k ζ_m^k for any length of v, reduced modulo Φ_m.
  static CyclotomicNumber from_power_coeffs(long m, std::vector<Rational> v) {
    CyclotomicNumber r(m, Rational(0));
    r.reduce_into(std::move(v));
    return r;
  }

  long conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) {
    same(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) {
    same(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  CyclotomicNumber operator-() const {
    CyclotomicNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    same(a, b);
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return from_power_coeffs(a.m_, std::move(v));
  }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& q) {
    for (auto& x : a.c_) x *= q;
    return a;
  }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  CyclotomicNumber pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CyclotomicNumber r(m_, Rational(1)), b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      if (k > 1) b *= b;
    }
    return r;
  }

  /// Solves (multiplication by this) y = 1 in the power basis.
  CyclotomicNumber inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
    std::size_t n = c_.size();
    RationalMatrix A(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
      auto col = (*this * zeta(m_, static_cast<long>(j))).c_;
      for (std::size_t i = 0; i < n; ++i) A[i][j] = col[i];
    }
    std::vector<Rational> e(n, Rational(0));
    e[0] = 1;
    CyclotomicNumber r(m_, Rational(0));
    r.c_ = solve(std::move(A), e);
    return r;
  }

  /// The image under ζ_m ↦ ζ_m^t.
  CyclotomicNumber galois_apply(long t) const {
    if (gcd(mod_floor(t, m_), m_) != 1) throw std::domain_error("galois_apply: t must be coprime to the conductor");
    std::vector<Rational> v(static_cast<std::size_t>(m_), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k)
      v[static_cast<std::size_t>(mod_floor(t * static_cast<long>(k), m_))] += c_[k];
    return from_power_coeffs(m_, std::move(v));
  }

  CyclotomicNumber conj() const { return galois_apply(m_ - 1); }

  /// Σ c_k z^k for a ring element z standing in for ζ_m; lift maps Q into the ring.
  template <class T, class Lift>
  T evaluate_at(const T& z, Lift lift) const {
    T r = lift(c_.back());
    for (std::size_t k = c_.size() - 1; k-- > 0;) r = r * z + lift(c_[k]);
    return r;
  }

  /// The complex value at ζ_m = exp(2πi/m).
  BigComplex embed(mpfr_prec_t bits) const {
    BigReal theta = pi(bits) * 2 / m_;
    BigComplex r(BigReal(0, bits), BigReal(0, bits));
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      BigReal q(c_[k], bits), ang = theta * static_cast<long>(k);
      r = r + BigComplex(cos(ang), sin(ang)) * q;
    }
    return r;
  }

  /// "2 - z - z^3 - ..." in powers of z = ζ_m, or the rational value.
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const Rational& c = c_[k];
      if (c == 0) continue;
      Rational a = abs(c);
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      bool show = a != 1 || k == 0;
      if (show) s += a.get_str();
      if (k > 0) s += std::string(show ? "*" : "") + "z" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s.empty() ? "0" : s;
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

 private:
  static long check(long m) {
    if (m < 1) throw std::domain_error("CyclotomicNumber: conductor must be positive");
    return m;
  }

  static void same(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("CyclotomicNumber: conductors differ");
  }

  void reduce_into(std::vector<Rational> v) {
    const auto& phi = cyclotomic_polynomial(m_);
    std::size_t d = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > d;) {
      if (v[i] == 0) continue;
      Rational c = v[i];
      for (std::size_t j = 0; j <= d; ++j) v[i - d + j] -= c * Rational(phi[j]);
    }
    v.resize(d, Rational(0));
    c_ = std::move(v);
  }

  long m_;
  std::vector<Rational> c_;
};

/// The exact Stark unit 2 - ζ_m^a - ζ_m^-a = (2 sin(aπ/m))^2.
inline CyclotomicNumber stark_unit_exact(long a, long m) {
  if (m < 3 || a <= 0 || 2 * a >= m || gcd(a, m) != 1)
    throw std::domain_error("stark_unit_exact: need m >= 3, 0 < a < m/2, gcd(a, m) = 1");
  return CyclotomicNumber(m, 2) - CyclotomicNumber::zeta(m, a) - CyclotomicNumber::zeta(m, -a);
}

/// The representative 0 < a' < m/2 of ±a mod m.
inline long normalize_pm(long a, long m) {
  long r = mod_floor(a, m);
  return std::min(r, m - r);
}

/// The admissible a for σ_{±a/m}: 0 < a < m/2, gcd(a, m) = 1.
inline std::vector<long> stark_indices(long m) {
  std::vector<long> out;
  for (long a = 1; 2 * a < m; ++a)
    if (gcd(a, m) == 1) out.push_back(a);
  return out;
}

struct RecExactEntry {
  long a = 0, image = 0;
  bool equal = false;
};

struct RecExactReport {
  long m = 0, t = 0;
  std::vector<RecExactEntry> entries;

  bool all_equal() const {
    for (const auto& e : entries)
      if (!e.equal) return false;
    return true;
  }
};

/// For every σ_{±a/m}: does ζ ↦ ζ^t send u(a) to u(a') exactly, with ±a' ≡ ±ta?
inline RecExactReport rec_exact_check(long m, long t) {
  if (m < 3) throw std::domain_error("rec_exact_check: need m >= 3");
  if (gcd(mod_floor(t, m), m) != 1) throw std::domain_error("rec_exact_check: t must be coprime to m");
  RecExactReport rep{m, mod_floor(t, m), {}};
  for (long a : stark_indices(m)) {
    long b = normalize_pm(t * a, m);
    rep.entries.push_back({a, b, stark_unit_exact(a, m).galois_apply(t) == stark_unit_exact(b, m)});
  }
  return rep;
}

/// The primitive integer minimal polynomial of x, from the first linear
/// dependency among 1, x, x^2, ... in the power basis.
inline IntPoly min_poly(const CyclotomicNumber& x, long degree_bound) {
  if (x.is_zero()) throw std::domain_error("min_poly: argument is zero");
  std::vector<std::vector<Rational>> cols;
  CyclotomicNumber xp(x.conductor(), Rational(1));
  for (long d = 0; d <= degree_bound + 1 && d <= static_cast<long>(x.coeffs().size()); ++d) {
    cols.push_back(xp.coeffs());
    if (auto c = kernel_vector(cols)) {
      if (d > degree_bound) break;
      BigInt den = 1;
      for (const auto& q : *c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      IntPoly P;
      for (const auto& q : *c) P.coeffs.push_back(BigInt(q * den));
      return P.primitive();
    }
    xp *= x;
  }
  throw std::domain_error("min_poly: degree exceeds bound " + std::to_string(degree_bound));
}

}  // namespace padicbeta
