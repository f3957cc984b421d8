#pragma once

// Verification suites as ordered task lists. Tasks run in parallel; reports
// come back in task order, which is the nested parameter order, so the
// stream is identical however the work was scheduled.

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "padicbeta/classical/beta_decomposition.hpp"
#include "padicbeta/classical/hurwitz.hpp"
#include "padicbeta/cli/run_config.hpp"
#include "padicbeta/cli/sampled_checks.hpp"
#include "padicbeta/reciprocity/checks.hpp"

namespace padicbeta::cli {

struct Task {
  std::string check;
  Params params;
  std::function<CheckReport()> run;
};

using TaskList = std::vector<Task>;

/// Runs one task; cap overruns become refusals and any other exception a failure.
inline CheckReport run_task(const Task& t) {
  try {
    return t.run();
  } catch (const std::length_error& e) {
    return refused(t.check, t.params, std::string("cost cap: ") + e.what());
  } catch (const std::exception& e) {
    CheckReport r;
    r.check = t.check;
    r.params = t.params;
    r.status = CheckReport::Status::Fail;
    r.detail = std::string("error: ") + e.what();
    return r;
  }
}

inline std::vector<CheckReport> run_tasks(const TaskList& tasks, unsigned threads = 0) {
  std::vector<CheckReport> out(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) out[k] = run_task(tasks[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

namespace detail {

inline BigReal real_tolerance(long k, long D) { return tolerance(k, digits_to_bits(D + kGuardDigits)); }

inline CheckReport real_report(std::string check, Params params, const BigReal& residual, const BigReal& tol) {
  CheckReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.residual_real = residual.to_sci(3);
  r.status = residual < tol ? CheckReport::Status::Pass : CheckReport::Status::Fail;
  return r;
}

inline void add(TaskList& tl, std::string check, Params params, std::function<CheckReport()> run) {
  tl.push_back({std::move(check), std::move(params), std::move(run)});
}

}  // namespace detail

// Real tolerances, as powers of ten below 1, in terms of the working digits D.
inline long special_value_digits(long D) { return D - 10; }
inline long derivative_digits(long D) { return (D - 10) / 2; }
inline long route_gap_digits(long D) { return D / 2; }

inline TaskList padic_core_tasks(const RunConfig& c) {
  TaskList tl;
  long N = c.precision, S = c.samples();
  auto seed = c.seed;
  for (long p : c.primes) {
    Params pp{{"p", p}, {"N", N}};
    detail::add(tl, "log-homomorphism", pp, [=] { return log_homomorphism(p, N, S, seed); });
    detail::add(tl, "exp-inverts-log", pp, [=] { return exp_inverts_log(p, N, S, seed); });
    detail::add(tl, "teichmuller-root-of-unity", pp, [=] { return teichmuller_root_of_unity(p, N, S, seed); });
    detail::add(tl, "star-reconstructs", pp, [=] { return star_reconstructs(p, N, S, seed); });
    detail::add(tl, "exp-extended-homomorphism", pp, [=] { return exp_extended_homomorphism(p, N, S, seed); });
  }
  return tl;
}

// The level-4 oracle sums p^{4+e} terms, so it is only sampled for p <= 5.
inline constexpr long kMaxOraclePrime = 5;

inline TaskList lgamma_tasks(const RunConfig& c) {
  TaskList tl;
  long N = c.precision, S = c.samples();
  auto seed = c.seed;
  for (long p : c.primes) {
    for (long e = 1; e <= 3; ++e) {
      Params pp{{"p", p}, {"e", e}, {"N", N}};
      detail::add(tl, "lgamma-reflection", pp, [=] { return lgamma_reflection(p, e, N, S, seed); });
      detail::add(tl, "lgamma-shift", pp, [=] { return lgamma_shift(p, e, N, S, seed); });
      detail::add(tl, "lgamma-scaling", pp, [=] { return lgamma_scaling(p, e, N, S, seed); });
      detail::add(tl, "lgamma-truncation", pp, [=] { return lgamma_truncation(p, e, N, c.gamma_samples(), seed); });
      if (p <= kMaxOraclePrime)
        detail::add(tl, "jx-oracle-convergence", pp, [=] { return jx_oracle_convergence(p, e, N, c.gamma_samples(), seed); });
    }
  }
  return tl;
}

inline TaskList gamma_tasks(const RunConfig& c) {
  TaskList tl;
  long N = c.precision, S = c.gamma_samples();
  auto seed = c.seed;
  for (long p : c.primes) {
    Params pp{{"p", p}, {"N", N}};
    detail::add(tl, "gamma-ext-shift", pp, [=] { return gamma_ext_shift(p, N, S, seed); });
    detail::add(tl, "gamma-ext-reflection", pp, [=] { return gamma_ext_reflection(p, N, S, seed); });
    for (long m : {2L, 3L}) {
      if (m == p) continue;
      detail::add(tl, "gamma-ext-multiplication", {{"p", p}, {"m", m}, {"N", N}},
                  [=] { return gamma_ext_multiplication(p, m, N, S, seed); });
    }
    detail::add(tl, "gamma-ext-multiplication-by-p", pp, [=] { return gamma_ext_multiplication_by_p(p, N, S, seed); });
    detail::add(tl, "morita-reflection", pp, [=] { return morita_reflection(p, N, c.samples(), seed); });
    detail::add(tl, "morita-continuity", pp, [=] { return morita_continuity(p, 8, N, S, seed); });
    detail::add(tl, "coleman-shift", pp, [=] { return coleman_shift(p, N, S, seed); });
    detail::add(tl, "coleman-bridge", pp, [=] { return coleman_bridge(p, N, S, seed); });
  }
  return tl;
}

inline TaskList beta_reflection_tasks(const RunConfig& c) {
  TaskList tl;
  long N = c.precision;
  for (long p : c.primes) {
    for (long m = c.m_min; m <= c.m_max; ++m) {
      for (long i = 1; i < m; ++i) {
        for (long j = 1; j < m; ++j) {
          if (i + j == m) continue;
          Params pp{{"p", p}, {"m", m}, {"i", i}, {"j", j}, {"N", N}};
          detail::add(tl, "beta-reflection", pp, [=] { return check_beta_reflection(p, m, i, j, N); });
          detail::add(tl, "beta-scalar-identity", pp, [=] { return check_beta_scalar_identity(p, m, i, j, N); });
        }
      }
    }
  }
  return tl;
}

/// B(1/3,1/3)^2 B(2/3,2/3) = 3 Γ(1/3)^3.
inline CheckReport beta_gamma_cube_identity(long D) {
  Rational t(1, 3), tt(2, 3);
  BigReal lhs = pow(beta_real(t, t, D), 2) * beta_real(tt, tt, D);
  BigReal rhs = pow(gamma_real(t, D), 3) * 3;
  return detail::real_report("beta-gamma-cube-identity", {{"D", D}}, abs(lhs / rhs - 1),
                             detail::real_tolerance(special_value_digits(D), D));
}

inline CheckReport beta_product(long a, long m, long D) {
  auto chk = verify_beta_product(decompose_gamma_product(a, m), D);
  auto r = detail::real_report("beta-product", {{"m", m}, {"a", a}, {"D", D}}, chk.residual,
                               detail::real_tolerance(special_value_digits(D), D));
  r.observed = chk.sign > 0 ? "+1" : "-1";
  return r;
}

/// Γ(q)Γ(1-q) sin(πq)/π = 1 over q = a/m, a check on the real gamma backend.
inline CheckReport gamma_reflection_classical_oracle(long m, long D) {
  mpfr_prec_t bits = digits_to_bits(D + kGuardDigits);
  BigReal worst(0, bits);
  for (long a = 1; a < m; ++a) {
    Rational q = make_rational(a, m);
    BigReal lhs = gamma_real(q, D) * gamma_real(1 - q, D) * sin(pi(bits) * BigReal(q, bits)) / pi(bits);
    worst = std::max(worst, abs(lhs - 1));
  }
  return detail::real_report("gamma-reflection-classical-oracle", {{"m", m}, {"D", D}}, worst,
                             detail::real_tolerance(special_value_digits(D), D));
}

inline TaskList beta_product_tasks(const RunConfig& c) {
  TaskList tl;
  long D = c.digits;
  detail::add(tl, "beta-gamma-cube-identity", {{"D", D}}, [=] { return beta_gamma_cube_identity(D); });
  for (long m = c.m_min; m <= c.m_max; ++m) {
    detail::add(tl, "gamma-reflection-classical-oracle", {{"m", m}, {"D", D}},
                [=] { return gamma_reflection_classical_oracle(m, D); });
    for (long a = 1; a < m; ++a)
      if (gcd(a, m) == 1) detail::add(tl, "beta-product", {{"m", m}, {"a", a}, {"D", D}}, [=] { return beta_product(a, m, D); });
  }
  return tl;
}

inline CheckReport hurwitz_special_value(long m, long a, long D) {
  BigReal v = hurwitz_zeta(Rational(0), Rational(m), Rational(a), D);
  BigReal want(Rational(1, 2) - make_rational(a, m), v.bits());
  return detail::real_report("hurwitz-special-value", {{"m", m}, {"a", a}, {"D", D}}, abs(v - want),
                             detail::real_tolerance(special_value_digits(D), D));
}

inline CheckReport hurwitz_derivative(long m, long a, long D) {
  auto d = hurwitz_zeta_deriv0(m, a, D);
  return detail::real_report("hurwitz-derivative", {{"m", m}, {"a", a}, {"D", D}}, abs(d.closed_form - d.oracle),
                             detail::real_tolerance(derivative_digits(D), D));
}

inline CheckReport stark_routes(long m, long a, long D) {
  auto s = stark_unit_real(a, m, D);
  auto r = detail::real_report("stark-routes", {{"m", m}, {"a", a}, {"D", D}}, s.route_gap(),
                               detail::real_tolerance(route_gap_digits(D), D));
  r.observed = s.value().to_fixed(12);
  return r;
}

inline CheckReport stark_special_value(long m, long a, long expected, long D) {
  auto s = stark_unit_real(a, m, D);
  auto r = detail::real_report("stark-special-value", {{"m", m}, {"a", a}, {"D", D}},
                               abs(s.value() - BigReal(expected, s.value().bits())),
                               detail::real_tolerance(special_value_digits(D), D));
  r.observed = std::to_string(expected);
  return r;
}

inline TaskList hurwitz_tasks(const RunConfig& c) {
  TaskList tl;
  long D = c.digits;
  for (long m = c.m_min; m <= c.m_max; ++m) {
    for (long a = 1; a <= m; ++a)
      detail::add(tl, "hurwitz-special-value", {{"m", m}, {"a", a}, {"D", D}}, [=] { return hurwitz_special_value(m, a, D); });
    for (long a = 1; a < m; ++a)
      detail::add(tl, "hurwitz-derivative", {{"m", m}, {"a", a}, {"D", D}}, [=] { return hurwitz_derivative(m, a, D); });
    for (long a : stark_indices(m))
      detail::add(tl, "stark-routes", {{"m", m}, {"a", a}, {"D", D}}, [=] { return stark_routes(m, a, D); });
    for (auto [mm, expected] : {std::pair{3L, 3L}, std::pair{4L, 2L}, std::pair{6L, 1L}})
      if (mm == m)
        detail::add(tl, "stark-special-value", {{"m", m}, {"a", 1}, {"D", D}},
                    [=] { return stark_special_value(m, 1, expected, D); });
  }
  return tl;
}

/// π must not be recognized under the same degree and height bounds as u(a/m).
inline CheckReport pi_sentinel(long m, long D) {
  Params params{{"m", m}, {"D", D}};
  BigReal x = pi(digits_to_bits(D + kGuardDigits));
  auto rec = recognize_algebraic(x, stark_degree_bound(m), stark_height_bound(m), D);
  if (rec.status == Recognition::Status::Refused) return refused("algebraicity-pi-sentinel", params, rec.detail);
  CheckReport r;
  r.check = "algebraicity-pi-sentinel";
  r.params = params;
  r.status = rec.found() ? CheckReport::Status::Fail : CheckReport::Status::Pass;
  r.observed = rec.found() ? rec.poly.to_string() : "not found";
  return r;
}

inline TaskList algebraicity_tasks(const RunConfig& c) {
  TaskList tl;
  long D = c.digits;
  for (long m = c.m_min; m <= c.m_max; ++m) {
    detail::add(tl, "algebraicity", {{"m", m}, {"D", D}}, [=] { return check_algebraicity(m, D); });
    detail::add(tl, "algebraicity-pi-sentinel", {{"m", m}, {"D", D}}, [=] { return pi_sentinel(m, D); });
  }
  return tl;
}

inline TaskList rec_exact_tasks(const RunConfig& c) {
  TaskList tl;
  for (long m = c.m_min; m <= c.m_max; ++m)
    for (long t = 1; t < m; ++t)
      if (gcd(t, m) == 1)
        detail::add(tl, "reciprocity-exact", {{"m", m}, {"t", t}}, [=] { return check_reciprocity_exact(m, t); });
  return tl;
}

inline TaskList rec_mod_roots_tasks(const RunConfig& c) {
  TaskList tl;
  long N = c.precision;
  for (long p : c.primes)
    for (long m = c.m_min; m <= c.m_max; ++m)
      if (m % p != 0)
        detail::add(tl, "reciprocity-mod-roots", {{"m", m}, {"p", p}, {"N", N}},
                    [=] { return check_reciprocity_mod_roots(m, p, N); });
  return tl;
}

inline TaskList gross_koblitz_tasks(const RunConfig& c) {
  TaskList tl;
  long N = c.precision;
  for (long p : c.primes)
    for (long m = c.m_min; m <= std::min(c.m_max, p - 1); ++m) {
      if ((p - 1) % m != 0) continue;
      for (long i = 1; i < m; ++i)
        for (long j = 1; j < m; ++j)
          if (i + j != m)
            detail::add(tl, "gross-koblitz-shadow", {{"p", p}, {"m", m}, {"i", i}, {"j", j}, {"N", N}},
                        [=] { return check_gross_koblitz_shadow(p, m, i, j, N); });
    }
  return tl;
}

inline TaskList suite_tasks(const std::string& suite, const RunConfig& c) {
  if (suite == "padic-core") return padic_core_tasks(c);
  if (suite == "lgamma-identities") return lgamma_tasks(c);
  if (suite == "gamma-functional-equations") return gamma_tasks(c);
  if (suite == "beta-reflection") return beta_reflection_tasks(c);
  if (suite == "beta-products") return beta_product_tasks(c);
  if (suite == "hurwitz") return hurwitz_tasks(c);
  if (suite == "algebraicity") return algebraicity_tasks(c);
  if (suite == "rec-exact") return rec_exact_tasks(c);
  if (suite == "rec-mod-roots") return rec_mod_roots_tasks(c);
  if (suite == "gross-koblitz") return gross_koblitz_tasks(c);
  if (suite == "all") {
    TaskList all;
    for (const auto& s : suite_names()) {
      auto part = suite_tasks(s, c);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw ConfigError("unknown suite '" + suite + "'");
}

// ---- rendering -------------------------------------------------------------

inline ordered_json report_json(const CheckReport& r, const std::string& hash) {
  ordered_json j;
  j["check"] = r.check;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["status"] = to_string(r.status);
  if (r.residual_valuation)
    j["residual"] = {{"valuation", *r.residual_valuation}};
  else if (r.residual_real)
    j["residual"] = {{"abs", *r.residual_real}};
  else
    j["residual"] = nullptr;
  j["observed"] = r.observed;
  j["detail"] = r.detail;
  j["config-hash"] = hash;
  return j;
}

inline std::string params_text(const CheckReport& r, char sep) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += sep;
    s += k + "=" + std::to_string(v);
  }
  return s;
}

inline std::string residual_text(const CheckReport& r) {
  if (r.residual_valuation) return "v=" + std::to_string(*r.residual_valuation);
  if (r.residual_real) return "abs=" + *r.residual_real;
  return "-";
}

inline void write_header(std::ostream& os, const std::string& format) {
  if (format == "tsv") os << "check\tparams\tstatus\tresidual\tobserved\tdetail\tconfig-hash\n";
}

inline void write_report(std::ostream& os, const CheckReport& r, const std::string& format, const std::string& hash) {
  if (format == "json") {
    os << report_json(r, hash).dump() << '\n';
  } else if (format == "tsv") {
    os << r.check << '\t' << params_text(r, ',') << '\t' << to_string(r.status) << '\t' << residual_text(r) << '\t'
       << r.observed << '\t' << r.detail << '\t' << hash << '\n';
  } else {
    std::string status = r.passed() ? "PASS" : r.failed() ? "FAIL" : "REFUSED";
    os << status << "  " << r.check << "  " << params_text(r, ' ') << "  " << residual_text(r);
    if (!r.observed.empty()) os << "  observed " << r.observed;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << '\n';
  }
}

struct SuiteSummary {
  long pass = 0, fail = 0, refused = 0;
};

inline SuiteSummary summarize(const std::vector<CheckReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) (r.passed() ? s.pass : r.failed() ? s.fail : s.refused)++;
  return s;
}

}  // namespace padicbeta::cli
