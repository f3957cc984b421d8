#include <gtest/gtest.h>

#include "padicbeta/reciprocity/checks.hpp"

using namespace padicbeta;

namespace {

constexpr long N = 12;

bool same_report(const CheckReport& a, const CheckReport& b) {
  return a.status == b.status && a.observed == b.observed && a.residual_valuation == b.residual_valuation;
}

}  // namespace

TEST(FrobeniusOnFraction, Examples) {
  EXPECT_EQ(frobenius_on_fraction(5, Rational(1, 3)), Rational(2, 3));
  EXPECT_EQ(frobenius_on_fraction(7, Rational(1, 3)), Rational(1, 3));
  EXPECT_EQ(frobenius_on_fraction(5, Rational(1, 3), 0), Rational(1, 3));
  EXPECT_EQ(frobenius_on_fraction(3, Rational(3, 3)), 1);
}

TEST(FrobeniusOnFraction, OrbitCloses) {
  for (long p : {3L, 5L, 7L, 11L}) {
    for (long m = 2; m <= 24; ++m) {
      if (m % p == 0) continue;
      long f = multiplicative_order(p % m, m);
      for (long a = 1; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        Rational r = make_rational(a, m);
        EXPECT_EQ(frobenius_on_fraction(p, r, f), r) << p << " " << a << "/" << m;
        for (long d = 1; d < f; ++d) EXPECT_NE(frobenius_on_fraction(p, r, d), r);
      }
    }
  }
}

TEST(FrobeniusFactor, DegreeZeroIsIdentity) {
  auto f = std::get<PadicNumber>(frobenius_factor(1, 1, 3, 5, 0, N));
  EXPECT_TRUE(equal_mod(f, PadicNumber::one(5, N), N));
  auto g = std::get<UnitModRoots>(frobenius_factor(1, 2, 25, 5, 0, N));
  EXPECT_TRUE(g.is_trivial(N));
}

TEST(FrobeniusFactor, FixedFractionsMatchSingleFactor) {
  // p ≡ 1 mod m: (-1)^ε p^{1-ε} / B_p⟨i/m, j/m⟩.
  for (auto [p, m] : {std::pair{7L, 3L}, std::pair{13L, 4L}, std::pair{11L, 5L}}) {
    for (long i = 1; i < m; ++i)
      for (long j = 1; j < m; ++j) {
        if (i + j == m) continue;
        Rational x = make_rational(i, m), y = make_rational(j, m);
        int e = epsilon(x, y);
        auto want = (PadicNumber::one(p, N) / std::get<PadicNumber>(beta_p_pointed(x, y, p, N))).shift(1 - e);
        if (e) want = -want;
        auto got = std::get<PadicNumber>(frobenius_factor(i, j, m, p, 1, N));
        EXPECT_TRUE(equal_mod(got, want, N)) << p << " " << m << " " << i << " " << j;
      }
  }
}

TEST(FrobeniusFactor, CocycleAlongTheOrbit) {
  // factor(i, j, d1 + d2) = factor(i, j, d1) · factor(p^d1 i, p^d1 j, d2).
  for (auto [p, m] : {std::pair{5L, 3L}, std::pair{3L, 7L}, std::pair{5L, 12L}}) {
    for (long i = 1; i < m; ++i)
      for (long j = 1; j < m; ++j) {
        if (i + j == m) continue;
        for (long d1 = 0; d1 <= 2; ++d1)
          for (long d2 = 0; d2 <= 2; ++d2) {
            long pd = pow_mod(p, d1, m);
            auto whole = std::get<PadicNumber>(frobenius_factor(i, j, m, p, d1 + d2, N));
            auto a = std::get<PadicNumber>(frobenius_factor(i, j, m, p, d1, N));
            auto b = std::get<PadicNumber>(frobenius_factor(pd * i % m, pd * j % m, m, p, d2, N));
            EXPECT_TRUE(equal_mod(whole, a * b, N)) << p << " " << m << " " << i << " " << j << " " << d1 << " " << d2;
          }
      }
  }
}

TEST(FrobeniusFactor, ValuationCountsCarries) {
  for (auto [p, m] : {std::pair{5L, 3L}, std::pair{3L, 7L}, std::pair{5L, 12L}}) {
    for (long i = 1; i < m; ++i)
      for (long j = 1; j < m; ++j) {
        if (i + j == m) continue;
        Rational x = make_rational(i, m), y = make_rational(j, m);
        for (long d = 0; d <= 3; ++d) {
          long want = 0;
          for (long k = 0; k < d; ++k) want += 1 - epsilon(frobenius_on_fraction(p, x, k), frobenius_on_fraction(p, y, k));
          Rational tx = frobenius_on_fraction(p, x, d), ty = frobenius_on_fraction(p, y, d);
          Rational ratio = 1;
          if (epsilon(tx, ty)) ratio *= frac_part(tx + ty);
          if (epsilon(x, y)) ratio /= frac_part(x + y);
          want += ord_p(ratio, p);
          EXPECT_EQ(std::get<PadicNumber>(frobenius_factor(i, j, m, p, d, N)).valuation(), want);
        }
      }
  }
}

TEST(FrobeniusFactor, BadCase) {
  auto c = std::get<UnitModRoots>(frobenius_factor(1, 2, 25, 5, 2, N));
  EXPECT_EQ(c.valuation(), 1);
  auto odd = std::get<UnitModRoots>(frobenius_factor(1, 2, 15, 5, 1, N));
  EXPECT_EQ(odd.valuation(), Rational(1, 2));
  // m = p^k: t = 1, so τ fixes every fraction and only p^{d/2} remains.
  auto fixed = std::get<UnitModRoots>(frobenius_factor(1, 2, 25, 5, 3, N));
  EXPECT_TRUE(equal_mod(fixed, UnitModRoots(Rational(3, 2), PadicNumber::exact_zero(5)), N));
  EXPECT_EQ(bad_case_multiplier(5, 15, 1), 11);  // 1 mod 5, 5 mod 3
  EXPECT_THROW(bad_case_multiplier(5, 15, 1, 4), std::domain_error);
  EXPECT_THROW(frobenius_factor(5, 2, 25, 5, 1, N), std::domain_error);
  EXPECT_THROW(frobenius_factor(1, 2, 3, 5, -1, N), std::domain_error);
}

TEST(JacobiSum, NormIsP) {
  for (auto [p, m] : {std::pair{7L, 3L}, std::pair{13L, 3L}, std::pair{13L, 4L}, std::pair{11L, 5L}, std::pair{31L, 6L}}) {
    for (long i = 1; i < m; ++i)
      for (long j = 1; j < m; ++j) {
        if (i + j == m) continue;
        auto J = jacobi_sum(p, m, i, j);
        EXPECT_EQ(J * J.conj(), CyclotomicNumber(m, p)) << p << " " << m << " " << i << " " << j;
        EXPECT_EQ(J, jacobi_sum(p, m, j, i));
      }
  }
  EXPECT_THROW(jacobi_sum(11, 3, 1, 1), std::domain_error);
  EXPECT_THROW(jacobi_sum(7, 3, 1, 2), std::domain_error);
}

TEST(JacobiSum, EmbeddingIsARingMap) {
  long p = 13, m = 4;
  auto z = teichmuller_zeta(p, m, N);
  EXPECT_TRUE(equal_mod(z.pow(m), PadicNumber::one(p, N), N));
  EXPECT_FALSE(equal_mod(z.pow(2), PadicNumber::one(p, N), 1));
  auto a = jacobi_sum(p, m, 1, 1), b = jacobi_sum(p, m, 1, 2);
  EXPECT_TRUE(equal_mod(embed_in_zp(a * b, p, N), embed_in_zp(a, p, N) * embed_in_zp(b, p, N), N));
}

TEST(BetaReflection, Examples) {
  auto good = check_beta_reflection(5, 3, 1, 1, N);
  EXPECT_TRUE(good.passed()) << good.detail;
  EXPECT_TRUE(good.observed == "+1" || good.observed == "-1");
  auto bad = check_beta_reflection(5, 25, 1, 2, N);
  EXPECT_TRUE(bad.passed()) << bad.detail;
  EXPECT_TRUE(same_report(check_beta_reflection(7, 12, 5, 2, N), check_beta_reflection(7, 12, 2, 5, N)));
  EXPECT_TRUE(same_report(check_beta_reflection(5, 25, 1, 2, N), check_beta_reflection(5, 25, 2, 1, N)));
  EXPECT_EQ(check_beta_reflection(5, 10, 5, 1, N).status, CheckReport::Status::Refused);
  EXPECT_EQ(check_beta_reflection(5, 10, 2, 3, N).status, CheckReport::Status::Refused);
  EXPECT_EQ(check_beta_reflection(5, 6, 2, 4, N).status, CheckReport::Status::Refused);
}

TEST(BetaReflection, GoodReductionGrid) {
  for (long p : {5L, 7L})
    for (long m = 2; m <= 12; ++m) {
      if (m % p == 0) continue;
      for (long i = 1; i < m; ++i)
        for (long j = 1; j < m; ++j) {
          if (i + j == m) continue;
          auto r = check_beta_reflection(p, m, i, j, N);
          EXPECT_TRUE(r.passed()) << p << " " << m << " " << i << " " << j;
        }
    }
}

// The product is a ratio of reflection pairs Γ_p(z)Γ_p(1 - z) = (-1)^{r(z)},
// r(z) in [1, p] the residue of z mod p; so its sign is (-1)^{r(x)+r(y)+r(<x+y>)}.
TEST(BetaReflection, SignMatchesResidueParity) {
  auto r = [](const Rational& z, long p) {
    long v = to_long(mod(BigInt(z.get_num()) * inverse_mod(to_long(mod(BigInt(z.get_den()), BigInt(p))), p), BigInt(p)));
    return v == 0 ? p : v;
  };
  long orbit_changes = 0;
  for (long p : {3L, 5L, 7L})
    for (long m = 2; m <= 14; ++m) {
      if (m % p == 0) continue;
      for (long i = 1; i < m; ++i)
        for (long j = 1; j < m; ++j) {
          if (i + j == m) continue;
          Rational x = make_rational(i, m), y = make_rational(j, m), w = frac_part(x + y);
          std::string want = (r(x, p) + r(y, p) + r(w, p)) % 2 == 0 ? "+1" : "-1";
          auto rep = check_beta_reflection(p, m, i, j, N);
          EXPECT_EQ(rep.observed, want) << p << " " << m << " " << i << " " << j;
          if (check_beta_reflection(p, m, i * p % m, j * p % m, N).observed != rep.observed) ++orbit_changes;
        }
    }
  // The sign is not a Frobenius-orbit invariant.
  EXPECT_GT(orbit_changes, 0);
}

TEST(BetaScalarIdentity, Grid) {
  auto r = check_beta_scalar_identity(5, 3, 1, 1, N);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.detail, "product 1/3, target -1/3");
  for (long p : {5L, 7L})
    for (long m = 2; m <= 12; ++m)
      for (long i = 1; i < m; ++i)
        for (long j = 1; j < m; ++j) {
          if (i + j == m) continue;
          auto s = check_beta_scalar_identity(p, m, i, j, N);
          if (m % p == 0 && !(i % p && j % p && (i + j) % p)) {
            EXPECT_EQ(s.status, CheckReport::Status::Refused);
            continue;
          }
          EXPECT_TRUE(s.passed()) << p << " " << m << " " << i << " " << j << " " << s.detail;
        }
  EXPECT_TRUE(check_beta_scalar_identity(5, 25, 1, 2, N).passed());
}

TEST(Algebraicity, Examples) {
  auto r5 = check_algebraicity(5, 60);
  EXPECT_TRUE(r5.passed()) << r5.detail;
  EXPECT_EQ(r5.observed, "x^2 - 5*x + 5");
  auto r3 = check_algebraicity(3, 60);
  EXPECT_TRUE(r3.passed());
  EXPECT_EQ(r3.observed, "x - 3");
  EXPECT_EQ(check_algebraicity(11, 40).status, CheckReport::Status::Refused);
  EXPECT_EQ(check_algebraicity(2, 60).status, CheckReport::Status::Refused);
}

TEST(Algebraicity, UpToTwelve) {
  for (long m = 3; m <= 12; ++m) {
    auto r = check_algebraicity(m, 60);
    EXPECT_TRUE(r.passed()) << m << " " << r.detail;
  }
}

TEST(ReciprocityExact, UpToThirty) {
  for (long m = 3; m <= 30; ++m)
    for (long t = 1; t < m; ++t) {
      if (std::gcd(t, m) != 1) continue;
      EXPECT_TRUE(check_reciprocity_exact(m, t).passed()) << m << " " << t;
    }
  EXPECT_EQ(check_reciprocity_exact(5, 2).observed, "1->2 2->1");
}

TEST(ReciprocityModRoots, Pairs) {
  for (auto [m, p] : {std::pair{5L, 3L}, std::pair{7L, 3L}, std::pair{3L, 7L}, std::pair{7L, 5L}, std::pair{12L, 5L},
                      std::pair{11L, 3L}}) {
    auto r = check_reciprocity_mod_roots(m, p, N);
    EXPECT_TRUE(r.passed()) << m << " " << p << " " << r.detail;
    EXPECT_EQ(r.residual_valuation, N);
  }
  EXPECT_EQ(check_reciprocity_mod_roots(3, 7, N).observed, "f=1");
  EXPECT_EQ(check_reciprocity_mod_roots(10, 5, N).status, CheckReport::Status::Refused);
}

TEST(ReciprocityModRoots, WrongTargetIsDetected) {
  // The unramified route separates u(1/7) from u(2/7) after Frobenius at 3.
  UnramifiedExtension R(3, 6, N);
  auto moved = R.frobenius(R.embed(stark_unit_exact(1, 7)));
  auto right = R.embed(stark_unit_exact(3, 7)), wrong = R.embed(stark_unit_exact(2, 7));
  EXPECT_GE(R.valuation(R.log_iwasawa(R.mul(moved, R.inverse(right)))), N);
  EXPECT_LT(R.valuation(R.log_iwasawa(R.mul(moved, R.inverse(wrong)))), N);
}

TEST(UnramifiedExtension, FieldStructure) {
  UnramifiedExtension R(5, 3, N);
  auto x = R.generator();
  EXPECT_TRUE(R.equal(R.mul(x, R.inverse(x)), R.one()));
  // Frobenius is a ring map of order f that reduces to the p-th power.
  auto y = R.add(x, R.from_integer(3));
  EXPECT_TRUE(R.equal(R.frobenius(R.mul(x, y)), R.mul(R.frobenius(x), R.frobenius(y))));
  EXPECT_TRUE(R.equal(R.frobenius(R.frobenius(R.frobenius(y))), y));
  auto diff = R.sub(R.frobenius(y), R.pow(y, BigInt(5)));
  EXPECT_GE(R.valuation(diff), 1);
  // Teichmüller lifts are fixed by x ↦ x^{p^f} and killed by log.
  auto w = R.teichmuller(y);
  EXPECT_GE(R.valuation(R.log_iwasawa(w)), N);
  EXPECT_GE(R.valuation(R.sub(R.log_iwasawa(R.mul(x, y)), R.add(R.log_iwasawa(x), R.log_iwasawa(y)))), N);
}

TEST(GrossKoblitzShadow, Examples) {
  auto a = check_gross_koblitz_shadow(7, 3, 1, 1, 10);
  EXPECT_TRUE(a.passed()) << a.detail;
  EXPECT_EQ(a.detail, "valuation 1, 1 - eps = 1");
  auto b = check_gross_koblitz_shadow(7, 3, 2, 2, 10);
  EXPECT_TRUE(b.passed()) << b.detail;
  EXPECT_EQ(b.detail, "valuation 0, 1 - eps = 0");
  for (long i = 1; i < 4; ++i)
    for (long j = 1; j < 4; ++j)
      if (i + j != 4) {
        EXPECT_TRUE(check_gross_koblitz_shadow(13, 4, i, j, 10).passed()) << i << " " << j;
      }
  EXPECT_EQ(check_gross_koblitz_shadow(11, 3, 1, 1, 10).status, CheckReport::Status::Refused);
}
