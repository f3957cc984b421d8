// Command-line front end: evaluate functions, run verification suites,
// print the table of Stark units over Q.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "padicbeta/cli/suites.hpp"
#include "padicbeta/padicbeta.hpp"

using namespace padicbeta;
using namespace padicbeta::cli;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct Options {
  std::string primes, m_range, format, suite;
  long precision = 12, digits = 60;
  std::uint64_t seed = 1;
  bool quick = false;
  std::optional<long> i, j, a, e;
  std::optional<std::string> z, s, x, y;
  std::string function;
};

RunConfig make_config(const Options& o, const std::string& default_format = "json") {
  RunConfig c;
  if (!o.primes.empty()) c.primes = parse_primes(o.primes);
  c.precision = o.precision;
  c.digits = o.digits;
  c.quick = o.quick;
  c.seed = o.seed;
  c.format = o.format.empty() ? default_format : o.format;
  c.m_max = o.quick ? 12 : 30;
  if (!o.m_range.empty()) parse_m_range(o.m_range, c.m_min, c.m_max);
  if (!o.suite.empty()) c.suite = o.suite;
  c.validate();
  return c;
}

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& fn) {
  if (!v) throw ConfigError(fn + " needs " + flag);
  return *v;
}

long single_prime(const RunConfig& c, const Options& o, const std::string& fn) {
  if (o.primes.empty()) throw ConfigError(fn + " needs --p");
  if (c.primes.size() != 1) throw ConfigError(fn + " takes a single prime");
  return c.primes.front();
}

// The two beta arguments: --x/--y, or i/m and j/m.
std::pair<Rational, Rational> beta_args(const Options& o, const std::string& fn) {
  if (o.x || o.y) return {parse_rational(need(o.x, "--x", fn)), parse_rational(need(o.y, "--y", fn))};
  long m = o.m_range.empty() ? 0 : parse_long(o.m_range, "--m");
  if (m <= 0) throw ConfigError(fn + " needs --m with --i and --j, or --x and --y");
  return {make_rational(need(o.i, "--i", fn), m), make_rational(need(o.j, "--j", fn), m)};
}

long conductor(const Options& o, const std::string& fn) {
  if (o.m_range.empty()) throw ConfigError(fn + " needs --m");
  return parse_long(o.m_range, "--m");
}

std::string render(const PointedBeta& b) {
  if (auto* v = std::get_if<PadicNumber>(&b)) return v->to_string();
  return std::get<UnitModRoots>(b).to_string();
}

int cmd_eval(const Options& o) {
  // Eval takes a bare conductor, so the range syntax is not parsed here.
  Options base = o;
  base.m_range.clear();
  RunConfig c = make_config(base);
  const std::string& fn = o.function;
  long N = c.precision, D = c.digits;
  std::string out;
  if (fn == "gamma-p") {
    out = gamma_morita(parse_rational(need(o.z, "--z", fn)), single_prime(c, o, fn), N).to_string();
  } else if (fn == "gamma-ext") {
    out = gamma_ext(parse_rational(need(o.z, "--z", fn)), single_prime(c, o, fn), N).to_string();
  } else if (fn == "gamma-coleman") {
    out = gamma_coleman(parse_rational(need(o.z, "--z", fn)), single_prime(c, o, fn), N).to_string();
  } else if (fn == "lgamma") {
    long p = single_prime(c, o, fn), e = o.e.value_or(1);
    if (e < 1) throw ConfigError("--e must be >= 1");
    Rational a = o.z ? parse_rational(*o.z) : Rational(need(o.a, "--a", fn));
    out = lgamma_series(PadicNumber::from_rational(a, p, N + e + 4), e, N).value.to_string();
  } else if (fn == "beta-p") {
    auto [x, y] = beta_args(o, fn);
    out = beta_p(x, y, single_prime(c, o, fn), N).to_string();
  } else if (fn == "beta-p-pointed") {
    auto [x, y] = beta_args(o, fn);
    out = render(beta_p_pointed(x, y, single_prime(c, o, fn), N));
  } else if (fn == "gamma") {
    out = gamma_real(parse_rational(need(o.z, "--z", fn)), D).to_fixed(D);
  } else if (fn == "beta") {
    auto [x, y] = beta_args(o, fn);
    out = beta_real(x, y, D).to_fixed(D);
  } else if (fn == "hurwitz") {
    Rational s = o.s ? parse_rational(*o.s) : Rational(0);
    out = hurwitz_zeta(s, Rational(conductor(o, fn)), Rational(need(o.a, "--a", fn)), D).to_fixed(D);
  } else if (fn == "stark-unit") {
    out = stark_unit_real(need(o.a, "--a", fn), conductor(o, fn), D).value().to_fixed(D);
  } else if (fn == "jacobi") {
    out = jacobi_sum(single_prime(c, o, fn), conductor(o, fn), need(o.i, "--i", fn), need(o.j, "--j", fn)).to_string();
  } else {
    throw ConfigError("unknown function '" + fn + "'");
  }
  std::cout << out << '\n';
  return kExitPass;
}

int cmd_verify(const Options& o) {
  RunConfig c = make_config(o);
  const std::string hash = c.hash();
  auto start = std::chrono::steady_clock::now();
  auto reports = run_tasks(suite_tasks(c.suite, c));
  write_header(std::cout, c.format);
  for (const auto& r : reports) write_report(std::cout, r, c.format, hash);
  std::cout.flush();
  auto s = summarize(reports);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << reports.size() << " reports: " << s.pass << " pass, " << s.fail << " fail, " << s.refused << " refused ("
            << c.suite << ", config " << hash << ", " << secs << " s)\n";
  return s.fail == 0 ? kExitPass : kExitFail;
}

int cmd_stark_table(const Options& o) {
  RunConfig c = make_config(o, "tsv");
  const std::string hash = c.hash();
  long D = c.digits;
  mpfr_prec_t bits = digits_to_bits(D + kGuardDigits);
  BigReal tol = tolerance(special_value_digits(D), bits);
  bool ok = true;
  if (c.format == "tsv") std::cout << "m\ta\tvalue\trecognized\tminimal-polynomial\texact\tresidual\n";
  for (long m = c.m_min; m <= c.m_max; ++m) {
    for (long a : stark_indices(m)) {
      BigReal value = stark_unit_real(a, m, D).value();
      CyclotomicNumber exact = stark_unit_exact(a, m);
      IntPoly minimal = min_poly(exact, euler_phi(m));
      Recognition rec = recognize_algebraic(value, stark_degree_bound(m), stark_height_bound(m), D);
      std::string recognized = rec.found() ? rec.poly.to_string() : to_string(rec.status);
      BigReal residual = abs(value - exact.embed(bits).re);
      if ((rec.found() && !(rec.poly == minimal)) || !(residual < tol)) ok = false;
      std::string shown = value.to_fixed(20);
      if (c.format == "json") {
        ordered_json row;
        row["m"] = m;
        row["a"] = a;
        row["value"] = shown;
        row["recognized"] = recognized;
        row["minimal-polynomial"] = minimal.to_string();
        row["exact"] = exact.to_string();
        row["residual"] = residual.to_sci(3);
        row["config-hash"] = hash;
        std::cout << row.dump() << '\n';
      } else if (c.format == "tsv") {
        std::cout << m << '\t' << a << '\t' << shown << '\t' << recognized << '\t' << minimal.to_string() << '\t'
                  << exact.to_string() << '\t' << residual.to_sci(3) << '\n';
      } else {
        std::cout << "u(" << a << "/" << m << ") = " << shown << "  recognized " << recognized << "  exact "
                  << exact.to_string() << "  residual " << residual.to_sci(3) << '\n';
      }
    }
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic gamma and beta functions, Stark units over Q, and their verification suites"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", o.primes, "prime, or comma-separated primes for suites")->envname("PADICBETA_P");
    sub->add_option("--precision", o.precision, "p-adic precision N")->envname("PADICBETA_PRECISION");
    sub->add_option("--digits", o.digits, "real working digits D")->envname("PADICBETA_DIGITS");
    sub->add_option("--m", o.m_range, "conductor, or range X (3..X) or A..B")->envname("PADICBETA_M");
    sub->add_option("--format", o.format, "json, tsv or text")->envname("PADICBETA_FORMAT");
    sub->add_option("--seed", o.seed, "seed for sampled checks")->envname("PADICBETA_SEED");
    sub->add_flag("--quick", o.quick, "small sample sizes, m <= 12")->envname("PADICBETA_QUICK");
  };

  auto* eval = app.add_subcommand("eval", "evaluate one function");
  add_common(eval);
  eval->add_option("function", o.function,
                   "gamma-p, gamma-ext, gamma-coleman, lgamma, beta-p, beta-p-pointed, gamma, beta, hurwitz, stark-unit, jacobi")
      ->required();
  eval->add_option("--i", o.i);
  eval->add_option("--j", o.j);
  eval->add_option("--a", o.a);
  eval->add_option("--e", o.e, "LΓ level");
  eval->add_option("--z", o.z, "rational argument");
  eval->add_option("--s", o.s, "Hurwitz exponent");
  eval->add_option("--x", o.x, "first beta argument");
  eval->add_option("--y", o.y, "second beta argument");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite,--suite", o.suite, "suite name or 'all'")->envname("PADICBETA_SUITE");

  auto* table = app.add_subcommand("stark-table", "Stark units u(a/m) with recognized and exact forms");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_stark_table(o);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
