#pragma once

// Computable consequences of the reciprocity law for the p-adic beta function:
// the beta reflection products, the scalar identity behind the comparison of
// p-adic and classical beta products, algebraicity of Stark units over Q, and
// their Galois equivariance mod roots of unity.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "padicbeta/classical/recognize.hpp"
#include "padicbeta/classical/stark.hpp"
#include "padicbeta/gamma/frobenius.hpp"
#include "padicbeta/gamma/jacobi.hpp"
#include "padicbeta/reciprocity/check_report.hpp"
#include "padicbeta/reciprocity/unramified.hpp"

namespace padicbeta {

namespace detail {

inline bool valid_pair(long m, long i, long j) { return m >= 2 && i > 0 && j > 0 && i < m && j < m && i + j != m; }

inline bool bad_reduction_case(long p, long m, long i, long j) {
  return m % p == 0 && i % p != 0 && j % p != 0 && (i + j) % p != 0;
}

inline CheckReport::Status status_of(bool ok) { return ok ? CheckReport::Status::Pass : CheckReport::Status::Fail; }

}  // namespace detail

/**
 * p ∤ m: B_p⟨i/m, j/m⟩ B_p⟨(m-i)/m, (m-j)/m⟩ = ±1 to O(p^N), sign recorded.
 * p | m, p ∤ ij(i+j): B_p(i/m, j/m) B_p((m-i)/m, (m-j)/m) ≡ (m/(m-i-j))* mod μ∞.
 */
inline CheckReport check_beta_reflection(long p, long m, long i, long j, long N) {
  std::vector<std::pair<std::string, long>> params{{"p", p}, {"m", m}, {"i", i}, {"j", j}, {"N", N}};
  const std::string name = "beta-reflection";
  if (!is_prime(p) || p == 2) return refused(name, params, "p must be an odd prime");
  if (!detail::valid_pair(m, i, j)) return refused(name, params, "need 0 < i, j < m and i + j != m");
  Rational x = make_rational(i, m), y = make_rational(j, m), xc = make_rational(m - i, m), yc = make_rational(m - j, m);
  CheckReport r;
  r.check = name;
  r.params = params;
  if (m % p != 0) {
    auto prod = std::get<PadicNumber>(beta_p_pointed(x, y, p, N)) * std::get<PadicNumber>(beta_p_pointed(xc, yc, p, N));
    auto one = PadicNumber::one(p, N);
    long vp = diff_valuation(prod, one), vm = diff_valuation(prod, -one);
    r.residual_valuation = std::min(std::max(vp, vm), N);
    r.observed = vp >= vm ? "+1" : "-1";
    r.status = detail::status_of(std::max(vp, vm) >= N);
    r.detail = "good reduction: product of pointed values is a sign";
    return r;
  }
  if (!detail::bad_reduction_case(p, m, i, j)) return refused(name, params, "p | m but p divides i j (i + j)");
  auto lhs = beta_p(x, y, p, N) * beta_p(xc, yc, p, N);
  auto rhs = UnitModRoots::of(star(PadicNumber::from_rational(make_rational(m, m - i - j), p, N + 2)));
  r.residual_valuation = std::min(log_residual(lhs, rhs), N);
  r.status = detail::status_of(equal_mod(lhs, rhs, N));
  r.observed = "val=" + lhs.valuation().get_str();
  r.detail = "bad reduction: class equals (m/(m-i-j))*";
  return r;
}

/**
 * ⟨i/m + j/m⟩^ε ⟨(m-i)/m + (m-j)/m⟩^ε' = ±(i/m + j/m - 1) exactly, with
 * ε + ε' = 1. In the bad-reduction case also checks that the star of this
 * scalar cancels the class of the plain beta product.
 */
inline CheckReport check_beta_scalar_identity(long p, long m, long i, long j, long N) {
  std::vector<std::pair<std::string, long>> params{{"p", p}, {"m", m}, {"i", i}, {"j", j}, {"N", N}};
  const std::string name = "beta-scalar-identity";
  if (!is_prime(p) || p == 2) return refused(name, params, "p must be an odd prime");
  if (!detail::valid_pair(m, i, j)) return refused(name, params, "need 0 < i, j < m and i + j != m");
  bool bad = m % p == 0;
  if (bad && !detail::bad_reduction_case(p, m, i, j)) return refused(name, params, "p | m but p divides i j (i + j)");
  Rational x = make_rational(i, m), y = make_rational(j, m), xc = make_rational(m - i, m), yc = make_rational(m - j, m);
  int e = epsilon(x, y), ec = epsilon(xc, yc);
  Rational prod = 1;
  if (e == 1) prod *= frac_part(x + y);
  if (ec == 1) prod *= frac_part(xc + yc);
  Rational target = x + y - 1;
  CheckReport r;
  r.check = name;
  r.params = params;
  bool ok = e + ec == 1 && abs(prod) == abs(target);
  r.observed = prod == target ? "+1" : "-1";
  r.detail = "product " + prod.get_str() + ", target " + target.get_str();
  if (bad && ok) {
    auto scalar = UnitModRoots::of(star(PadicNumber::from_rational(prod, p, N + 2)));
    auto beta_class = beta_p(x, y, p, N) * beta_p(xc, yc, p, N);
    auto total = scalar * beta_class;
    r.residual_valuation = std::min(log_residual(total, UnitModRoots::identity(p)), N);
    ok = total.is_trivial(N);
  }
  r.status = detail::status_of(ok);
  return r;
}

/// Degree and height bounds for the Stark units of conductor m: degree
/// φ(m)/2, and coefficients are elementary symmetric functions of φ(m)/2
/// conjugates in (0, 4], so at most 5^{φ(m)/2}.
inline long stark_degree_bound(long m) { return std::max(1L, euler_phi(m) / 2); }
inline BigInt stark_height_bound(long m) { return pow_int(5, static_cast<unsigned long>(stark_degree_bound(m))); }

/**
 * Every u(a/m) recognized from D digits by lattice reduction, and the
 * recognized polynomial equals the exact minimal polynomial from Q(ζ_m).
 */
inline CheckReport check_algebraicity(long m, long D) {
  std::vector<std::pair<std::string, long>> params{{"m", m}, {"D", D}};
  const std::string name = "algebraicity";
  if (m < 3) return refused(name, params, "need m >= 3");
  CheckReport r;
  r.check = name;
  r.params = params;
  long deg = stark_degree_bound(m);
  BigInt H = stark_height_bound(m);
  BigReal worst(0, digits_to_bits(D + kGuardDigits));
  bool ok = true;
  for (long a : stark_indices(m)) {
    BigReal x = stark_unit_gamma_route(a, m, D);
    IntPoly exact = min_poly(stark_unit_exact(a, m), euler_phi(m));
    Recognition rec = recognize_algebraic(x, deg, H, D);
    if (rec.status == Recognition::Status::Refused) return refused(name, params, rec.detail);
    BigReal res = abs(evaluate(exact, x));
    if (res > worst) worst = res;
    if (!rec.found() || !(rec.poly == exact)) {
      ok = false;
      r.detail += "a=" + std::to_string(a) + ": recognized " + (rec.found() ? rec.poly.to_string() : "nothing") +
                  ", exact " + exact.to_string() + "; ";
    }
    if (a == stark_indices(m).front()) r.observed = exact.to_string();
  }
  r.residual_real = worst.to_sci(3);
  r.status = detail::status_of(ok);
  return r;
}

/// ζ ↦ ζ^t maps u(a/m) to u(a'/m), ±a' ≡ ±ta, as exact elements of Q(ζ_m).
inline CheckReport check_reciprocity_exact(long m, long t) {
  std::vector<std::pair<std::string, long>> params{{"m", m}, {"t", t}};
  const std::string name = "reciprocity-exact";
  if (m < 3 || gcd(mod_floor(t, m), m) != 1) return refused(name, params, "need m >= 3 and gcd(t, m) = 1");
  auto rep = rec_exact_check(m, t);
  CheckReport r;
  r.check = name;
  r.params = params;
  r.status = detail::status_of(rep.all_equal());
  for (const auto& e : rep.entries) {
    if (!r.observed.empty()) r.observed += " ";
    r.observed += std::to_string(e.a) + "->" + std::to_string(e.image);
    if (!e.equal) r.detail += "a=" + std::to_string(e.a) + " mismatch; ";
  }
  return r;
}

// Largest unramified degree ord_m(p) the mod-roots check will build.
inline constexpr long kMaxExtensionDegree = 12;

/**
 * Frobenius at p (t ≡ p mod m) moves u(a/m) to u(a'/m) mod μ∞, by two
 * independent routes: exactly in Q(ζ_m), and inside the unramified extension
 * of degree ord_m(p), where the arithmetic Frobenius (found by Newton
 * iteration on the defining polynomial) is applied to the embedded unit and
 * the quotient by the embedded u(a'/m) must have valuation 0 and log 0.
 */
inline CheckReport check_reciprocity_mod_roots(long m, long p, long N) {
  std::vector<std::pair<std::string, long>> params{{"m", m}, {"p", p}, {"N", N}};
  const std::string name = "reciprocity-mod-roots";
  if (!is_prime(p) || p == 2) return refused(name, params, "p must be an odd prime");
  if (m < 3 || m % p == 0) return refused(name, params, "need m >= 3 and p not dividing m");
  long f = multiplicative_order(p % m, m);
  if (f > kMaxExtensionDegree)
    return refused(name, params, "extension degree " + std::to_string(f) + " exceeds " + std::to_string(kMaxExtensionDegree));
  auto exact = rec_exact_check(m, p);
  UnramifiedExtension R(p, f, N + 2);
  long worst = N;
  bool padic_ok = true;
  for (long a : stark_indices(m)) {
    long b = normalize_pm(p * a, m);
    ExtElement moved = R.frobenius(R.embed(stark_unit_exact(a, m)));
    ExtElement target = R.embed(stark_unit_exact(b, m));
    if (!R.is_unit(moved) || !R.is_unit(target)) throw std::logic_error("reciprocity-mod-roots: embedded Stark unit is not a p-adic unit");
    ExtElement q = R.mul(moved, R.inverse(target));
    long v = R.valuation(R.log_iwasawa(q));
    worst = std::min(worst, v);
    if (v < N) padic_ok = false;
  }
  CheckReport r;
  r.check = name;
  r.params = params;
  r.residual_valuation = worst;
  r.observed = "f=" + std::to_string(f);
  if (exact.all_equal() != padic_ok)
    r.detail = std::string("routes disagree: exact ") + (exact.all_equal() ? "pass" : "fail") + ", p-adic " +
               (padic_ok ? "pass" : "fail");
  r.status = detail::status_of(exact.all_equal() && padic_ok);
  return r;
}

/**
 * For m | p - 1, the brute-force Jacobi sum J(χ^i, χ^j) embedded in Z_p
 * against the degree-one Frobenius factor: equal valuations 1 - ε and equal
 * Iwasawa logs to O(p^N). The root of unity J / factor is recorded as its
 * balanced residue mod p.
 */
inline CheckReport check_gross_koblitz_shadow(long p, long m, long i, long j, long N) {
  std::vector<std::pair<std::string, long>> params{{"p", p}, {"m", m}, {"i", i}, {"j", j}, {"N", N}};
  const std::string name = "gross-koblitz-shadow";
  if (!is_prime(p) || p == 2) return refused(name, params, "p must be an odd prime");
  if (m < 2 || (p - 1) % m != 0) return refused(name, params, "m must divide p - 1");
  if (!detail::valid_pair(m, i, j)) return refused(name, params, "need 0 < i, j < m and i + j != m");
  PadicNumber J = embed_in_zp(jacobi_sum(p, m, i, j), p, N + 2);
  PadicNumber F = std::get<PadicNumber>(frobenius_factor(i, j, m, p, 1, N));
  int e = epsilon(make_rational(i, m), make_rational(j, m));
  CheckReport r;
  r.check = name;
  r.params = params;
  auto cj = UnitModRoots::of(J), cf = UnitModRoots::of(F);
  r.residual_valuation = std::min(log_residual(cj, cf), N);
  bool ok = J.valuation() == 1 - e && F.valuation() == 1 - e && equal_mod(cj, cf, N);
  PadicNumber torsion = J / F;
  r.observed = torsion.is_unit() ? balanced(mod(torsion.unit(), BigInt(p)), BigInt(p)).get_str() : "non-unit";
  r.detail = "valuation " + std::to_string(J.valuation()) + ", 1 - eps = " + std::to_string(1 - e);
  r.status = detail::status_of(ok);
  return r;
}

}  // namespace padicbeta
