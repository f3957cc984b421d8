#pragma once

#include <string>

#include "padicbeta/classical/bigreal.hpp"
#include "padicbeta/classical/lattice.hpp"
#include "padicbeta/core/intpoly.hpp"

namespace padicbeta {

struct Recognition {
  enum class Status { Found, NotFound, Refused };
  Status status = Status::NotFound;
  IntPoly poly;
  std::string detail;

  bool found() const { return status == Status::Found; }
};

inline const char* to_string(Recognition::Status s) {
  switch (s) {
    case Recognition::Status::Found: return "found";
    case Recognition::Status::NotFound: return "not-found";
    case Recognition::Status::Refused: return "refused";
  }
  return "?";
}

inline long decimal_digits(const BigInt& n) { return static_cast<long>(BigInt(abs(n)).get_str().size()); }

/// P(x) at the precision of x.
inline BigReal evaluate(const IntPoly& P, const BigReal& x) {
  BigReal r(0, x.bits());
  for (std::size_t i = P.coeffs.size(); i-- > 0;) r = r * x + BigReal(P.coeffs[i], x.bits());
  return r;
}

/**
 * Searches for an integer polynomial of degree <= degree_bound and height
 * <= height_bound vanishing at x (known to D digits), by LLL on the lattice
 * spanned by the rows [e_i | round(10^D x^i)]. Degrees are tried in
 * increasing order, so a hit is the lowest-degree relation. A hit is evidence
 * only; a miss says nothing about transcendence.
 */
inline Recognition recognize_algebraic(const BigReal& x, long degree_bound, const BigInt& height_bound, long D) {
  Recognition out;
  if (degree_bound < 1 || height_bound < 1) throw std::invalid_argument("recognize_algebraic: bounds must be positive");
  long needed = 3 * degree_bound * decimal_digits(height_bound);
  if (D < needed) {
    out.status = Recognition::Status::Refused;
    out.detail = "need at least " + std::to_string(needed) + " digits, have " + std::to_string(D);
    return out;
  }
  mpfr_prec_t bits = x.bits();
  BigReal scale = pow(BigReal(10, bits), D);
  BigReal accept = pow(BigReal(10, bits), -(D / 2));
  for (long d = 1; d <= degree_bound; ++d) {
    std::vector<IntVector> basis;
    BigReal xp(1, bits);
    for (long i = 0; i <= d; ++i) {
      IntVector row(static_cast<std::size_t>(d + 2), BigInt(0));
      row[static_cast<std::size_t>(i)] = 1;
      row.back() = round_to_int(xp * scale);
      basis.push_back(std::move(row));
      xp *= x;
    }
    lll_reduce(basis);
    for (const auto& v : basis) {
      IntPoly P;
      P.coeffs.assign(v.begin(), v.end() - 1);
      if (P.degree() != d) continue;
      P = P.primitive();
      if (P.height() > height_bound) continue;
      if (abs(evaluate(P, x)) < accept) {
        out.status = Recognition::Status::Found;
        out.poly = P;
        return out;
      }
    }
  }
  out.status = Recognition::Status::NotFound;
  out.detail = "no relation of degree <= " + std::to_string(degree_bound) + " and height <= " + height_bound.get_str();
  return out;
}

}  // namespace padicbeta
