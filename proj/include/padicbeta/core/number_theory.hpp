#pragma once

// Small-integer number theory: primality, orders, primitive roots, divisors.
// Inputs here are desk-scale (conductors and primes well below 2^31).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padicbeta {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_odd_prime(long p) {
  if (p == 2) throw std::invalid_argument("p = 2 is not supported; use an odd prime");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

inline long gcd(long a, long b) { return std::gcd(a, b); }

inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long mul_mod(long a, long b, long m) {
  return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

inline long pow_mod(long base, long exp, long m) {
  long result = 1 % m;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Prime factorization as (prime, exponent) pairs, ascending.
inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline long euler_phi(long n) {
  long r = n;
  for (auto [q, e] : factorize(n)) r = r / q * (q - 1);
  return r;
}

inline int mobius(long n) {
  int sign = 1;
  for (auto [q, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
inline long multiplicative_order(long a, long m) {
  if (m == 1) return 1;
  if (gcd(mod_floor(a, m), m) != 1) throw std::domain_error("multiplicative_order: gcd(a, m) != 1");
  long order = euler_phi(m);
  for (auto [q, e] : factorize(order)) {
    for (int k = 0; k < e; ++k) {
      if (pow_mod(a, order / q, m) == 1)
        order /= q;
      else
        break;
    }
  }
  return order;
}

inline long least_primitive_root(long p) {
  if (!is_prime(p)) throw std::invalid_argument("least_primitive_root: p not prime");
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, r = mod_floor(a, m);
  long g1 = r;
  while (g1 != 0) {
    long q = g / g1;
    long t = g - q * g1;
    g = g1;
    g1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::domain_error("inverse_mod: not invertible");
  return mod_floor(x, m);
}

/// Smallest t in [0, m1*m2) with t = r1 mod m1, t = r2 mod m2 (coprime moduli).
inline long crt(long r1, long m1, long r2, long m2) {
  long t = mod_floor(r1 + mul_mod(mul_mod(mod_floor(r2 - r1, m2), inverse_mod(m1 % m2, m2), m2), m1, m1 * m2),
                     m1 * m2);
  return t;
}

/// Largest k with p^k dividing n (n != 0).
inline int ord_p_long(long n, long p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

/// floor(log_p(n)) for n >= 1.
inline long floor_log(long n, long p) {
  long k = 0;
  for (long v = p; v <= n; v *= p) ++k;
  return k;
}

}  // namespace padicbeta
