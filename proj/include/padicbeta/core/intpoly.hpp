#pragma once

#include <string>
#include <vector>

#include "padicbeta/core/rational.hpp"

namespace padicbeta {

/// Integer polynomial, coefficients from the constant term up.
struct IntPoly {
  std::vector<BigInt> coeffs;

  long degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
      if (coeffs[i] != 0) return static_cast<long>(i);
    return -1;
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  /// Divides out the content and makes the leading coefficient positive.
  IntPoly primitive() const {
    IntPoly r = *this;
    r.trim();
    if (r.coeffs.empty()) return r;
    BigInt g = r.content();
    if (r.coeffs.back() < 0) g = -g;
    for (auto& c : r.coeffs) c /= g;
    return r;
  }

  BigInt height() const {
    BigInt h = 0;
    for (const auto& c : coeffs)
      if (abs(c) > h) h = abs(c);
    return h;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a, y = b;
    x.trim();
    y.trim();
    return x.coeffs == y.coeffs;
  }

  /// "x^2 - 5*x + 5".
  std::string to_string() const {
    long d = degree();
    if (d < 0) return "0";
    std::string s;
    for (long i = d; i >= 0; --i) {
      const BigInt& c = coeffs[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      BigInt a = abs(c);
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      bool show = a != 1 || i == 0;
      if (show) s += a.get_str();
      if (i > 0) s += std::string(show ? "*" : "") + "x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }
};

}  // namespace padicbeta
