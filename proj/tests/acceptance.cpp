// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "padicbeta/cli/suites.hpp"
#include "padicbeta/padicbeta.hpp"

using namespace padicbeta;
using namespace padicbeta::cli;

namespace {

// Pinned tolerances and sizes.
constexpr long kDigits = 60;                 // real working digits D
constexpr long kBetaProductTol = 50;         // residual < 10^-50
constexpr double kBetaProductBudget = 120;   // seconds
constexpr long kSpecialValueTol = 50;        // 10^-50
constexpr long kDerivativeTol = 25;          // 10^-25
constexpr long kRouteGapTol = 30;            // 10^-30
constexpr long kPrecision = 12;              // O(p^12)
constexpr long kColemanPrecision = 10;       // O(p^10)
constexpr long kGrossKoblitzPrecision = 10;  // O(p^10)
constexpr long kSamples = 100;
constexpr long kScalingUnits = 20;
constexpr long kColemanSamples = 20;
constexpr long kContinuityMaxK = 8;
constexpr long kOracleLevels = 4;
constexpr double kDeterminismBudget = 600;  // seconds per run
constexpr std::uint64_t kSeed = 20261016;

mpfr_prec_t bits() { return digits_to_bits(kDigits + kGuardDigits); }
BigReal tol(long k) { return tolerance(k, bits()); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  char t[32];
  std::snprintf(t, sizeof t, "%.1f s", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << name << "  [" << t << "]";
  if (!o.detail.empty()) std::cout << "  " << o.detail;
  std::cout << std::endl;
}

// Requires a passing report; anything else is recorded.
void expect_pass(Outcome& o, const CheckReport& r) {
  if (r.passed()) return;
  std::string where = r.check + " " + params_text(r, ' ') + ": " + to_string(r.status);
  if (!r.detail.empty()) where += " (" + r.detail + ")";
  o.fail(where);
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(PADICBETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  std::array<char, 1 << 16> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), f)) > 0;) out.append(buf.data(), n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main() {
  std::cout << "seed " << kSeed << ", D = " << kDigits << ", N = " << kPrecision << std::endl;

  criterion(1, "beta-product identity for gcd(a,m) = 1, 3 <= m <= 16, and B(1/3,1/3)^2 B(2/3,2/3) = 3 G(1/3)^3", [] {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    BigReal worst(0, bits());
    long count = 0;
    for (long m = 3; m <= 16; ++m)
      for (long a = 1; a < m; ++a) {
        if (gcd(a, m) != 1) continue;
        auto chk = verify_beta_product(decompose_gamma_product(a, m), kDigits);
        if (chk.residual > worst) worst = chk.residual;
        if (!(chk.residual < tol(kBetaProductTol))) o.fail("a=" + std::to_string(a) + " m=" + std::to_string(m));
        ++count;
      }
    Rational t(1, 3), tt(2, 3);
    BigReal cube = abs(pow(beta_real(t, t, kDigits), 2) * beta_real(tt, tt, kDigits) / (pow(gamma_real(t, kDigits), 3) * 3) - 1);
    if (!(cube < tol(kBetaProductTol))) o.fail("cube identity residual " + cube.to_sci(3));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kBetaProductBudget) o.fail("runtime " + std::to_string(secs) + " s");
    if (o.pass)
      o.detail = std::to_string(count) + " identities, worst " + worst.to_sci(3) + ", cube identity " + cube.to_sci(3);
    return o;
  });

  criterion(2, "Hurwitz: zeta(0,m,a) = 1/2 - a/m to 1e-50, closed zeta'(0,m,a) vs numeric oracle to 1e-25, m <= 12", [] {
    Outcome o;
    BigReal worst_value(0, bits()), worst_deriv(0, bits());
    for (long m = 1; m <= 12; ++m)
      for (long a = 1; a <= m; ++a) {
        BigReal v = hurwitz_zeta(Rational(0), Rational(m), Rational(a), kDigits);
        BigReal err = abs(v - BigReal(Rational(1, 2) - make_rational(a, m), bits()));
        if (err > worst_value) worst_value = err;
        if (!(err < tol(kSpecialValueTol))) o.fail("value m=" + std::to_string(m) + " a=" + std::to_string(a));
        auto d = hurwitz_zeta_deriv0(m, a, kDigits);
        BigReal derr = abs(d.closed_form - d.oracle);
        if (derr > worst_deriv) worst_deriv = derr;
        if (!(derr < tol(kDerivativeTol))) o.fail("derivative m=" + std::to_string(m) + " a=" + std::to_string(a));
      }
    if (o.pass) o.detail = "worst value " + worst_value.to_sci(3) + ", worst derivative " + worst_deriv.to_sci(3);
    return o;
  });

  criterion(3, "Stark units u(1/3) = 3, u(1/4) = 2, u(1/6) = 1 to 1e-50; gamma and zeta routes agree to 1e-30, m <= 12", [] {
    Outcome o;
    for (auto [m, want] : {std::pair{3L, 3L}, std::pair{4L, 2L}, std::pair{6L, 1L}}) {
      BigReal err = abs(stark_unit_real(1, m, kDigits).value() - BigReal(want, bits()));
      if (!(err < tol(kSpecialValueTol))) o.fail("u(1/" + std::to_string(m) + ") off by " + err.to_sci(3));
    }
    BigReal worst(0, bits());
    long count = 0;
    for (long m = 3; m <= 12; ++m)
      for (long a : stark_indices(m)) {
        BigReal gap = stark_unit_real(a, m, kDigits).route_gap();
        if (gap > worst) worst = gap;
        if (!(gap < tol(kRouteGapTol))) o.fail("route gap at a=" + std::to_string(a) + " m=" + std::to_string(m));
        ++count;
      }
    if (o.pass) o.detail = std::to_string(count) + " units, worst route gap " + worst.to_sci(3);
    return o;
  });

  criterion(4, "every u(a/m), m <= 12, recognized as its exact minimal polynomial; pi never recognized", [] {
    Outcome o;
    long recognized = 0, sentinels = 0;
    for (long m = 3; m <= 12; ++m) {
      long deg = stark_degree_bound(m);
      BigInt H = stark_height_bound(m);
      for (long a : stark_indices(m)) {
        IntPoly exact = min_poly(stark_unit_exact(a, m), euler_phi(m));
        Recognition rec = recognize_algebraic(stark_unit_gamma_route(a, m, kDigits), deg, H, kDigits);
        if (rec.found() && rec.poly == exact)
          ++recognized;
        else
          o.fail("a=" + std::to_string(a) + " m=" + std::to_string(m) + ": " + to_string(rec.status));
      }
      Recognition pi_rec = recognize_algebraic(pi(bits()), deg, H, kDigits);
      if (pi_rec.status != Recognition::Status::NotFound)
        o.fail("pi sentinel at m=" + std::to_string(m) + ": " + to_string(pi_rec.status));
      ++sentinels;
    }
    if (o.pass)
      o.detail = std::to_string(recognized) + " units matched, " + std::to_string(sentinels) + " pi sentinels not found";
    return o;
  });

  criterion(5, "exact reciprocity for all m <= 30 and all t; mod-roots quotient class (0,0) to O(p^12) on six (m,p)", [] {
    Outcome o;
    long count = 0;
    for (long m = 3; m <= 30; ++m)
      for (long t = 1; t < m; ++t)
        if (gcd(t, m) == 1) {
          expect_pass(o, check_reciprocity_exact(m, t));
          ++count;
        }
    for (auto [m, p] : {std::pair{5L, 3L}, {7L, 3L}, {3L, 7L}, {7L, 5L}, {12L, 5L}, {11L, 3L}}) {
      auto r = check_reciprocity_mod_roots(m, p, kPrecision);
      expect_pass(o, r);
      if (!r.residual_valuation || *r.residual_valuation < kPrecision) o.fail("mod-roots residual at m=" + std::to_string(m));
    }
    if (o.pass) o.detail = std::to_string(count) + " (m,t) exact, 6 pairs mod roots";
    return o;
  });

  criterion(6, "LGamma reflection, shift, scaling (20 units c), duplication and m = 2, 3 multiplication to O(p^12)", [] {
    Outcome o;
    for (long p : {3L, 5L, 7L}) {
      for (long e = 1; e <= 3; ++e) {
        expect_pass(o, lgamma_reflection(p, e, kPrecision, kSamples, kSeed));
        expect_pass(o, lgamma_shift(p, e, kPrecision, kSamples, kSeed));
        // Scaling over the first 20 units c, each with kSamples / 20 random a.
        long pe = to_long(ppow(p, e));
        auto rng = report_rng(kSeed, "acceptance-scaling", {{"p", p}, {"e", e}});
        auto a1 = PadicNumber::from_rational(pe, p, kPrecision + e + 4);
        long c = 0;
        for (long k = 0; k < kScalingUnits; ++k) {
          do ++c;
          while (c % p == 0);
          for (long s = 0; s < kSamples / kScalingUnits; ++s) {
            long a = random_unit(rng, p, 100000);
            auto A = PadicNumber::from_rational(a, p, kPrecision + e + 4), C = PadicNumber::from_rational(c, p, kPrecision + e + 4);
            auto b1 = PadicNumber::from_rational(make_rational(a, pe) - Rational(1, 2), p, kPrecision + 2 * e + 4);
            auto lhs = lgamma_general(A * C, a1 * C, kPrecision);
            auto rhs = lgamma_general(A, a1, kPrecision) + b1 * log_iwasawa(C);
            if (!equal_mod(lhs, rhs, kPrecision))
              o.fail("scaling p=" + std::to_string(p) + " e=" + std::to_string(e) + " a=" + std::to_string(a) + " c=" + std::to_string(c));
          }
        }
      }
      for (long m : {2L, 3L})
        if (m != p) expect_pass(o, gamma_ext_multiplication(p, m, kPrecision, kSamples, kSeed));
    }
    if (o.pass) o.detail = "p in {3,5,7}, e <= 3, 100 samples per identity";
    return o;
  });

  criterion(7, "valuation of LGamma - J_X oracle nondecreasing in level l = 1..4, every sampled (a,e), p in {3,5}", [] {
    Outcome o;
    long samples = 0, nonmonotone = 0, below_bound = 0;
    std::string first;
    std::map<std::string, long> per_case;
    for (long p : {3L, 5L}) {
      for (long e = 1; e <= 3; ++e) {
        auto rng = report_rng(kSeed, "acceptance-jx", {{"p", p}, {"e", e}});
        for (long s = 0; s < kSamples; ++s) {
          long a = random_unit(rng, p, 1000000);
          auto v = jx_level_valuations(a, p, e, kPrecision, kOracleLevels);
          ++samples;
          for (long l = 1; l <= kOracleLevels; ++l)
            if (v[static_cast<std::size_t>(l - 1)] < std::min(kPrecision, l + 1)) ++below_bound;
          bool mono = true;
          for (std::size_t k = 1; k < v.size(); ++k) mono = mono && v[k] >= v[k - 1];
          if (!mono) {
            ++nonmonotone;
            ++per_case["p=" + std::to_string(p) + ",e=" + std::to_string(e)];
            if (first.empty()) {
              first = "p=" + std::to_string(p) + " e=" + std::to_string(e) + " a=" + std::to_string(a) + " levels";
              for (long x : v) first += " " + std::to_string(x);
            }
          }
        }
      }
    }
    std::string counts;
    for (const auto& [k, n] : per_case) counts += " " + k + ":" + std::to_string(n);
    if (nonmonotone > 0) o.fail(std::to_string(nonmonotone) + "/" + std::to_string(samples) + " samples not monotone (" + counts.substr(1) + "); first " + first);
    std::string bound = "valuation >= l + 1 held at every level for " +
                        (below_bound == 0 ? std::string("all samples") : std::to_string(samples * kOracleLevels - below_bound) + " levels");
    o.detail += (o.detail.empty() ? "" : "; ") + bound;
    return o;
  });

  criterion(8, "Morita: G_p(z) G_p(1-z) = +-1 mod p^12 for 100 z per p; continuity mod p^k for k <= 8", [] {
    Outcome o;
    std::string signs;
    for (long p : {3L, 5L, 7L}) {
      auto r = morita_reflection(p, kPrecision, kSamples, kSeed);
      expect_pass(o, r);
      signs += " p=" + std::to_string(p) + " " + r.observed + ";";
      expect_pass(o, morita_continuity(p, kContinuityMaxK, kPrecision, kSamples / 10, kSeed));
    }
    if (o.pass) o.detail = "signs" + signs;
    return o;
  });

  criterion(9, "beta reflection: product +-1 to O(p^12) for p in {5,7}, m <= 12; class equals star(m/(m-i-j)) for m in {p, p^2}", [] {
    Outcome o;
    long good = 0, bad = 0;
    for (long p : {5L, 7L}) {
      for (long m = 2; m <= 12; ++m) {
        if (m % p == 0) continue;
        for (long i = 1; i < m; ++i)
          for (long j = 1; j < m; ++j)
            if (i + j != m) {
              auto r = check_beta_reflection(p, m, i, j, kPrecision);
              expect_pass(o, r);
              if (!r.residual_valuation || *r.residual_valuation < kPrecision) o.fail("residual below N at " + params_text(r, ' '));
              ++good;
            }
      }
      for (long m : {p, p * p})
        for (long i = 1; i < m; ++i)
          for (long j = 1; j < m; ++j)
            if (i % p && j % p && (i + j) % p) {
              expect_pass(o, check_beta_reflection(p, m, i, j, kPrecision));
              ++bad;
            }
    }
    if (o.pass) o.detail = std::to_string(good) + " good-reduction and " + std::to_string(bad) + " bad-reduction pairs";
    return o;
  });

  criterion(10, "Coleman bridge: class(G_col(z)) = G(z) / G(z_p) for 20 random z per p in {3,5,7} to O(p^10)", [] {
    Outcome o;
    for (long p : {3L, 5L, 7L}) expect_pass(o, coleman_bridge(p, kColemanPrecision, kColemanSamples, kSeed));
    return o;
  });

  criterion(11, "Gross-Koblitz shadow on (7,3), (13,3), (13,4), (11,5): valuation 1 - eps, log to O(p^10), torsion constant on orbits", [] {
    Outcome o;
    std::set<std::string> torsion;
    long count = 0, largest_orbit = 0;
    for (auto [p, m] : {std::pair{7L, 3L}, {13L, 3L}, {13L, 4L}, {11L, 5L}}) {
      std::map<std::pair<long, long>, std::string> seen;
      for (long i = 1; i < m; ++i)
        for (long j = 1; j < m; ++j)
          if (i + j != m) {
            auto r = check_gross_koblitz_shadow(p, m, i, j, kGrossKoblitzPrecision);
            expect_pass(o, r);
            seen[{i, j}] = r.observed;
            torsion.insert(r.observed);
            ++count;
          }
      for (const auto& [ij, obs] : seen) {
        long i = ij.first, j = ij.second, size = 0;
        do {
          i = i * p % m;
          j = j * p % m;
          ++size;
          if (seen.at({i, j}) != obs) o.fail("torsion varies on the orbit of (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ") at p=" + std::to_string(p));
        } while (i != ij.first || j != ij.second);
        largest_orbit = std::max(largest_orbit, size);
      }
    }
    std::string values;
    for (const auto& t : torsion) values += " " + t;
    if (o.pass)
      o.detail = std::to_string(count) + " pairs; torsion observed:" + values + "; largest orbit " + std::to_string(largest_orbit);
    return o;
  });

  criterion(12, "verify all --quick twice with one seed gives byte-identical reports, each run under 10 min", [] {
    Outcome o;
    std::string args = "verify all --quick --seed " + std::to_string(kSeed);
    std::string outs[2];
    for (int k = 0; k < 2; ++k) {
      auto start = std::chrono::steady_clock::now();
      auto [code, out] = run_cli(args);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (code != 0) o.fail("run " + std::to_string(k + 1) + " exited " + std::to_string(code));
      if (secs >= kDeterminismBudget) o.fail("run " + std::to_string(k + 1) + " took " + std::to_string(secs) + " s");
      outs[k] = std::move(out);
    }
    if (outs[0].empty()) o.fail("empty report stream");
    if (outs[0] != outs[1]) o.fail("report streams differ");
    if (o.pass) {
      long n = 0;
      for (char ch : outs[0]) n += ch == '\n';
      o.detail = std::to_string(n) + " reports, " + std::to_string(outs[0].size()) + " bytes identical";
    }
    return o;
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
