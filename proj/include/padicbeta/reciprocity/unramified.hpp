#pragma once

// The unramified extension of Q_p of degree f, as Z_p[x]/(G) for a monic G
// whose reduction is a primitive polynomial over F_p, computed modulo p^W.

#include <stdexcept>
#include <string>
#include <vector>

#include "padicbeta/core/number_theory.hpp"
#include "padicbeta/core/padic_number.hpp"
#include "padicbeta/cyclotomic/cyclotomic.hpp"

namespace padicbeta {

/// An element of O = Z_p[x]/(G) modulo p^W, coefficients of 1, x, ..., x^{f-1}.
struct ExtElement {
  std::vector<BigInt> c;
};

class UnramifiedExtension {
 public:
  /// The degree-f extension of Q_p; G is the first primitive polynomial in
  /// lexicographic order of its coefficients.
  UnramifiedExtension(long p, long f, long W) : p_(p), f_(f), W_(W), M_(ppow(p, W)) {
    require_odd_prime(p);
    if (f < 1) throw std::domain_error("UnramifiedExtension: degree must be positive");
    if (W < 1) throw std::domain_error("UnramifiedExtension: precision must be positive");
    order_ = 1;
    for (long k = 0; k < f; ++k) order_ *= p;
    order_ -= 1;
    G_ = find_primitive_polynomial(p, f, order_);
    frob_ = compute_frobenius_of_generator();
  }

  long prime() const { return p_; }
  long degree() const { return f_; }
  long precision() const { return W_; }
  /// p^f - 1, the order of the Teichmüller group.
  const BigInt& unit_order() const { return order_; }
  /// G from the constant term up, monic of degree f.
  const std::vector<BigInt>& modulus() const { return G_; }

  ExtElement from_integer(const BigInt& n) const {
    ExtElement r = zero();
    r.c[0] = mod(n, M_);
    return r;
  }

  ExtElement from_rational(const Rational& q) const {
    if (ord_p(BigInt(q.get_den()), p_) > 0) throw std::domain_error("UnramifiedExtension: rational is not p-integral");
    return from_integer(BigInt(q.get_num()) * inverse_mod(BigInt(q.get_den()), M_));
  }

  ExtElement zero() const { return ExtElement{std::vector<BigInt>(static_cast<std::size_t>(f_), BigInt(0))}; }
  ExtElement one() const { return from_integer(1); }
  ExtElement generator() const {
    ExtElement x{x_class(G_)};
    for (auto& c : x.c) c = mod(c, M_);
    return x;
  }

  ExtElement add(const ExtElement& a, const ExtElement& b) const {
    ExtElement r = zero();
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = mod(a.c[i] + b.c[i], M_);
    return r;
  }

  ExtElement sub(const ExtElement& a, const ExtElement& b) const {
    ExtElement r = zero();
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = mod(a.c[i] - b.c[i], M_);
    return r;
  }

  ExtElement mul(const ExtElement& a, const ExtElement& b) const { return ExtElement{poly_mulmod(a.c, b.c, G_, M_)}; }

  ExtElement pow(ExtElement b, BigInt e) const {
    // Negative exponents need a unit.
    if (e < 0) return pow(inverse(b), -e);
    ExtElement r = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, b);
      e >>= 1;
      if (e > 0) b = mul(b, b);
    }
    return r;
  }

  bool equal(const ExtElement& a, const ExtElement& b) const {
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (mod(a.c[i] - b.c[i], M_) != 0) return false;
    return true;
  }

  /// min_i ord_p(c_i), capped at W; the basis is integral, so this is the valuation.
  long valuation(const ExtElement& a) const {
    long v = W_;
    for (const auto& x : a.c)
      if (x != 0) v = std::min(v, ord_p(x, p_));
    return v;
  }

  bool is_unit(const ExtElement& a) const { return valuation(a) == 0; }

  /// Inverse of a unit: an inverse mod p by Fermat, refined by Newton.
  ExtElement inverse(const ExtElement& a) const {
    if (!is_unit(a)) throw std::domain_error("UnramifiedExtension: inverse of a non-unit");
    BigInt P(p_);
    ExtElement y{poly_powmod(a.c, order_ - 1, G_, P)};
    for (long prec = 1; prec < W_; prec *= 2) {
      ExtElement ay = mul(a, y);
      y = mul(y, sub(from_integer(2), ay));
    }
    return y;
  }

  /// The Teichmüller representative of a unit: lim a^{p^{fn}}.
  ExtElement teichmuller(const ExtElement& a) const {
    if (!is_unit(a)) throw std::domain_error("UnramifiedExtension: Teichmüller of a non-unit");
    BigInt q = order_ + 1;
    ExtElement x = a;
    for (;;) {
      ExtElement y = pow(x, q);
      if (equal(x, y)) return x;
      x = y;
    }
  }

  /**
   * The arithmetic Frobenius: the ring automorphism with φ(y) ≡ y^p mod p,
   * determined by φ(x) = the root of G congruent to x^p, found by Newton.
   */
  ExtElement frobenius(const ExtElement& a) const {
    const ExtElement& r = frob_;
    ExtElement out = zero(), rk = one();
    for (long i = 0; i < f_; ++i) {
      out = add(out, mul(rk, from_integer(a.c[static_cast<std::size_t>(i)])));
      rk = mul(rk, r);
    }
    return out;
  }

  /// Iwasawa log of a nonzero element: log of the unit part, through
  /// u^{p^f - 1} ∈ 1 + pO, divided by p^f - 1.
  ExtElement log_iwasawa(const ExtElement& a) const {
    long v = valuation(a);
    if (v >= W_) throw std::domain_error("UnramifiedExtension: log of zero");
    BigInt pv = ppow(p_, v);
    ExtElement u = zero();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      BigInt x = a.c[i];
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pv.get_mpz_t());
      u.c[i] = x;
    }
    long A = W_ - v;
    // Terms of log(1 + w), v(w) >= 1: valuation >= k - ord_p(k).
    long K = 1;
    while ((K + 1) - floor_log(K + 1, p_) < A) ++K;
    long g = floor_log(K, p_);
    BigInt MA = ppow(p_, A), Mg = ppow(p_, A + g);
    // u^{p^f-1} is only known mod p^A, but 1 + w needs no more to fix log mod p^A.
    ExtElement w{poly_powmod(u.c, order_, G_, MA)};
    w.c[0] -= 1;
    ExtElement wk = one(), sum = zero();
    for (long k = 1; k <= K; ++k) {
      wk.c = poly_mulmod(wk.c, w.c, G_, Mg);
      long o = ord_p_long(k, p_);
      long ku = k;
      for (long i = 0; i < o; ++i) ku /= p_;
      BigInt po = ppow(p_, o), inv = inverse_mod(BigInt(ku), Mg);
      for (std::size_t i = 0; i < sum.c.size(); ++i) {
        BigInt t = wk.c[i];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), po.get_mpz_t());
        t *= inv;
        sum.c[i] += k % 2 == 1 ? t : BigInt(-t);
      }
    }
    BigInt scale = inverse_mod(order_, MA);
    for (auto& x : sum.c) x = mod(x * scale, MA);
    return sum;
  }

  /// A primitive m-th root of unity for m | p^f - 1: (Teichmüller of x)^{(p^f-1)/m}.
  ExtElement root_of_unity(long m) const {
    if (m < 1 || order_ % m != 0) throw std::domain_error("UnramifiedExtension: m does not divide p^f - 1");
    ExtElement z = pow(teichmuller(generator()), BigInt(order_ / m));
    if (!equal(pow(z, BigInt(m)), one())) throw std::logic_error("root_of_unity: z^m != 1");
    for (auto [q, e] : factorize(m))
      if (equal(pow(z, BigInt(m / q)), one())) throw std::logic_error("root_of_unity: order of z is a proper divisor of m");
    return z;
  }

  /// The image of a p-integral element of Q(ζ_m) under ζ_m ↦ root_of_unity(m).
  ExtElement embed(const CyclotomicNumber& x) const {
    ExtElement z = root_of_unity(x.conductor());
    return x.evaluate_at(Ring{this, z}, [&](const Rational& q) { return Ring{this, from_rational(q)}; }).e;
  }

  std::string to_string(const ExtElement& a) const {
    std::string s = "[";
    for (std::size_t i = 0; i < a.c.size(); ++i) s += (i ? ", " : "") + balanced(a.c[i], M_).get_str();
    return s + "] + O(" + std::to_string(p_) + "^" + std::to_string(W_) + ")";
  }

 private:
  // Operator wrapper so CyclotomicNumber::evaluate_at can run in this ring.
  struct Ring {
    const UnramifiedExtension* R;
    ExtElement e;
    friend Ring operator+(const Ring& a, const Ring& b) { return {a.R, a.R->add(a.e, b.e)}; }
    friend Ring operator*(const Ring& a, const Ring& b) { return {a.R, a.R->mul(a.e, b.e)}; }
  };

  // a b mod (G, M) for coefficient vectors of length deg G.
  static std::vector<BigInt> poly_mulmod(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                         const std::vector<BigInt>& G, const BigInt& M) {
    std::size_t f = G.size() - 1;
    std::vector<BigInt> v(2 * f - 1, BigInt(0));
    for (std::size_t i = 0; i < f; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < f; ++j) v[i + j] += a[i] * b[j];
    }
    for (std::size_t i = v.size(); i-- > f;) {
      BigInt c = mod(v[i], M);
      if (c == 0) continue;
      for (std::size_t j = 0; j <= f; ++j) v[i - f + j] -= c * G[j];
    }
    v.resize(f);
    for (auto& x : v) x = mod(x, M);
    return v;
  }

  static std::vector<BigInt> poly_powmod(std::vector<BigInt> b, BigInt e, const std::vector<BigInt>& G, const BigInt& M) {
    std::vector<BigInt> r(G.size() - 1, BigInt(0));
    r[0] = mod(BigInt(1), M);
    for (auto& x : b) x = mod(x, M);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, b, G, M);
      e >>= 1;
      if (e > 0) b = poly_mulmod(b, b, G, M);
    }
    return r;
  }

  // The class of x in Z[x]/(G), as a coefficient vector.
  static std::vector<BigInt> x_class(const std::vector<BigInt>& G) {
    std::size_t f = G.size() - 1;
    std::vector<BigInt> x(f, BigInt(0));
    if (f == 1)
      x[0] = -G[0];
    else
      x[1] = 1;
    return x;
  }

  ExtElement eval_poly(const std::vector<BigInt>& coeffs, const ExtElement& r) const {
    ExtElement out = from_integer(coeffs.back());
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) out = add(mul(out, r), from_integer(coeffs[i]));
    return out;
  }

  ExtElement compute_frobenius_of_generator() const {
    std::vector<BigInt> dG;
    for (std::size_t i = 1; i < G_.size(); ++i) dG.push_back(G_[i] * static_cast<long>(i));
    ExtElement r{poly_powmod(x_class(G_), BigInt(p_), G_, BigInt(p_))};
    for (long prec = 1; prec < 2 * W_; prec *= 2) r = sub(r, mul(eval_poly(G_, r), inverse(eval_poly(dG, r))));
    if (valuation(eval_poly(G_, r)) < W_) throw std::logic_error("frobenius: Newton iteration did not converge");
    return r;
  }

  // Monic G mod p of degree f with x of multiplicative order p^f - 1 in F_p[x]/(G);
  // such a quotient has p^f - 1 units, so it is a field and G is irreducible.
  static std::vector<BigInt> find_primitive_polynomial(long p, long f, const BigInt& order) {
    std::vector<long> primes;
    for (auto [q, e] : factorize_big(order)) primes.push_back(q);
    std::vector<long> digits(static_cast<std::size_t>(f), 0);
    BigInt P(p);
    auto is_one = [&](const std::vector<BigInt>& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != (i == 0 ? 1 : 0)) return false;
      return true;
    };
    for (;;) {
      std::vector<BigInt> G(digits.begin(), digits.end());
      G.push_back(1);
      if (G[0] != 0) {
        auto x = x_class(G);
        bool ok = is_one(poly_powmod(x, order, G, P));
        for (long q : primes) {
          if (!ok) break;
          if (is_one(poly_powmod(x, order / q, G, P))) ok = false;
        }
        if (ok) return G;
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) throw std::logic_error("no primitive polynomial found");
    }
  }

  static std::vector<std::pair<long, int>> factorize_big(BigInt n) {
    std::vector<std::pair<long, int>> out;
    for (long q = 2; BigInt(q) * q <= n; ++q) {
      int e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      if (e) out.push_back({q, e});
    }
    if (n > 1) {
      if (!n.fits_slong_p()) throw std::domain_error("UnramifiedExtension: p^f - 1 too large to factor");
      out.push_back({n.get_si(), 1});
    }
    return out;
  }

  long p_, f_, W_;
  BigInt M_, order_;
  std::vector<BigInt> G_;
  ExtElement frob_;
};

}  // namespace padicbeta
