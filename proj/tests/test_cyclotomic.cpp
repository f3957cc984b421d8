#include <gtest/gtest.h>

#include <random>

#include "padicbeta/classical/stark.hpp"
#include "padicbeta/cyclotomic/cyclotomic.hpp"
#include "test_support.hpp"

using namespace padicbeta;
using test_support::uniform;

namespace {

CyclotomicNumber random_element(std::mt19937_64& rng, long m) {
  std::vector<Rational> v;
  for (long k = 0; k < m; ++k) v.push_back(test_support::random_rational(rng, 9));
  return CyclotomicNumber::from_power_coeffs(m, v);
}

long random_coprime(std::mt19937_64& rng, long m) {
  for (;;) {
    long t = uniform(rng, 1, m - 1);
    if (std::gcd(t, m) == 1) return t;
  }
}

IntPoly poly(std::vector<long> c) {
  IntPoly P;
  for (long x : c) P.coeffs.push_back(BigInt(x));
  return P;
}

}  // namespace

TEST(CyclotomicPolynomial, SmallConductors) {
  auto as_poly = [](long m) { return IntPoly{cyclotomic_polynomial(m)}; };
  EXPECT_EQ(as_poly(1), poly({-1, 1}));
  EXPECT_EQ(as_poly(5), poly({1, 1, 1, 1, 1}));
  EXPECT_EQ(as_poly(6), poly({1, -1, 1}));
  EXPECT_EQ(as_poly(12), poly({1, 0, -1, 0, 1}));
  // Φ_105 is the first with a coefficient outside {-1, 0, 1}.
  EXPECT_EQ(as_poly(105).height(), 2);
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXmMinusOne) {
  for (long m = 1; m <= 40; ++m) {
    std::vector<BigInt> prod{BigInt(1)};
    for (long d : divisors(m)) prod = detail::poly_mul(prod, cyclotomic_polynomial(d));
    EXPECT_EQ(IntPoly{prod}, IntPoly{detail::x_pow_minus_one(m)}) << m;
    EXPECT_EQ(static_cast<long>(cyclotomic_polynomial(m).size()) - 1, euler_phi(m));
  }
}

TEST(CyclotomicNumber, ZetaHasOrderM) {
  for (long m = 1; m <= 30; ++m) {
    auto z = CyclotomicNumber::zeta(m, 1);
    EXPECT_EQ(z.pow(m), CyclotomicNumber(m, 1)) << m;
    for (long k = 1; k < m; ++k) EXPECT_NE(z.pow(k), CyclotomicNumber(m, 1)) << m << " " << k;
  }
}

TEST(CyclotomicNumber, RingAxiomProbes) {
  std::mt19937_64 rng(21);
  for (long m : {3L, 5L, 7L, 8L, 12L, 15L, 30L}) {
    for (int t = 0; t < 5; ++t) {
      auto a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CyclotomicNumber(m, 1));
      }
    }
  }
}

TEST(Galois, Examples) {
  std::mt19937_64 rng(22);
  for (long m : {5L, 7L, 9L, 12L, 20L}) {
    auto x = random_element(rng, m);
    EXPECT_EQ(x.galois_apply(1), x);
    for (long a = 0; a < m; ++a) {
      long t = random_coprime(rng, m);
      EXPECT_EQ(CyclotomicNumber::zeta(m, a).galois_apply(t), CyclotomicNumber::zeta(m, t * a % m));
    }
    for (int k = 0; k < 5; ++k) {
      long s = random_coprime(rng, m), t = random_coprime(rng, m);
      EXPECT_EQ(x.galois_apply(t).galois_apply(s), x.galois_apply(s * t % m));
    }
    // Galois maps are ring homomorphisms.
    auto y = random_element(rng, m);
    long t = random_coprime(rng, m);
    EXPECT_EQ((x * y).galois_apply(t), x.galois_apply(t) * y.galois_apply(t));
  }
  EXPECT_THROW(CyclotomicNumber::zeta(6, 1).galois_apply(3), std::domain_error);
}

TEST(StarkExact, Examples) {
  EXPECT_EQ(stark_unit_exact(1, 3), CyclotomicNumber(3, 3));
  EXPECT_EQ(stark_unit_exact(1, 4), CyclotomicNumber(4, 2));
  EXPECT_EQ(stark_unit_exact(1, 6), CyclotomicNumber(6, 1));
  EXPECT_EQ(min_poly(stark_unit_exact(1, 5), 4).to_string(), "x^2 - 5*x + 5");
  EXPECT_EQ(min_poly(stark_unit_exact(2, 5), 4).to_string(), "x^2 - 5*x + 5");
  EXPECT_THROW(stark_unit_exact(2, 4), std::domain_error);
  EXPECT_THROW(stark_unit_exact(3, 5), std::domain_error);
  EXPECT_THROW(stark_unit_exact(1, 2), std::domain_error);
}

TEST(StarkExact, TotallyPositiveAndMatchesClassical) {
  constexpr long D = 60;
  mpfr_prec_t bits = digits_to_bits(D + kGuardDigits);
  BigReal tol = tolerance(D - 10, bits);
  for (long m = 3; m <= 16; ++m) {
    for (long a : stark_indices(m)) {
      auto u = stark_unit_exact(a, m);
      EXPECT_LT(abs(u.embed(bits).re - stark_unit_real(a, m, D).value()), tol) << a << "/" << m;
      EXPECT_LT(abs(u.embed(bits).im), tol);
      for (long t = 1; t < m; ++t) {
        if (std::gcd(t, m) != 1) continue;
        EXPECT_GT(u.galois_apply(t).embed(bits).re, BigReal(0, bits)) << a << "/" << m << " t=" << t;
      }
    }
  }
}

TEST(RecExact, Examples) {
  auto r52 = rec_exact_check(5, 2);
  ASSERT_EQ(r52.entries.size(), 2u);
  EXPECT_EQ(r52.entries[0].a, 1);
  EXPECT_EQ(r52.entries[0].image, 2);
  EXPECT_TRUE(r52.all_equal());
  for (long m = 3; m <= 20; ++m) {
    auto id = rec_exact_check(m, 1);
    auto cc = rec_exact_check(m, m - 1);
    EXPECT_TRUE(id.all_equal());
    EXPECT_TRUE(cc.all_equal());
    for (std::size_t k = 0; k < id.entries.size(); ++k) {
      EXPECT_EQ(id.entries[k].image, id.entries[k].a);
      EXPECT_EQ(cc.entries[k].image, cc.entries[k].a);
    }
  }
  EXPECT_THROW(rec_exact_check(6, 2), std::domain_error);
}

TEST(RecExact, DetectsAWrongImage) {
  // u(1/7) and u(2/7) are distinct, so a mismatched pairing must be caught.
  EXPECT_NE(stark_unit_exact(1, 7).galois_apply(2), stark_unit_exact(1, 7));
  EXPECT_EQ(stark_unit_exact(1, 7).galois_apply(2), stark_unit_exact(2, 7));
}

TEST(MinPoly, Examples) {
  EXPECT_EQ(min_poly(CyclotomicNumber(7, 3), 1), poly({-3, 1}));
  EXPECT_EQ(min_poly(CyclotomicNumber(7, Rational(2, 3)), 1), poly({-2, 3}));
  EXPECT_EQ(min_poly(CyclotomicNumber::zeta(5, 1), 4), IntPoly{cyclotomic_polynomial(5)});
  EXPECT_EQ(min_poly(CyclotomicNumber::zeta(12, 1), 4), IntPoly{cyclotomic_polynomial(12)});
  EXPECT_THROW(min_poly(CyclotomicNumber::zeta(5, 1), 3), std::domain_error);
  EXPECT_THROW(min_poly(CyclotomicNumber(5, 0), 3), std::domain_error);
}

TEST(MinPoly, GaloisEquivariant) {
  std::mt19937_64 rng(23);
  for (long m : {5L, 7L, 8L, 9L, 12L}) {
    for (int k = 0; k < 4; ++k) {
      auto x = random_element(rng, m);
      if (x.is_zero()) continue;
      long t = random_coprime(rng, m);
      auto P = min_poly(x, euler_phi(m));
      EXPECT_EQ(min_poly(x.galois_apply(t), euler_phi(m)), P);
      // P(x) = 0 exactly.
      auto val = CyclotomicNumber(m, 0);
      for (std::size_t i = P.coeffs.size(); i-- > 0;) val = val * x + CyclotomicNumber(m, Rational(P.coeffs[i]));
      EXPECT_TRUE(val.is_zero());
    }
  }
}
