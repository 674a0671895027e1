#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "twistzhu/exactnum.hpp"

using namespace twistzhu;

namespace {

CycloScalar random_cyclo(std::mt19937_64& rng, int k) {
  CycloScalar out = CycloScalar(Scalar(0)).promoted(k);
  for (int e = 0; e < k; ++e) out += eta_power(k, e) * CycloScalar(oracle::random_rational(rng));
  return out;
}

}  // namespace

TEST(Scalar, CanonicalForm) {
  const Scalar a(6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a, Scalar(-3, 2));
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Scalar(4, 2).to_string(), "2");
  EXPECT_TRUE(Scalar(0, 5).is_zero());
}

TEST(Scalar, Arithmetic) {
  const Scalar a(1, 3), b(-5, 7);
  EXPECT_EQ(a + b, Scalar(-8, 21));
  EXPECT_EQ(a - b, Scalar(22, 21));
  EXPECT_EQ(a * b, Scalar(-5, 21));
  EXPECT_EQ(a / b, Scalar(-7, 15));
  EXPECT_EQ(b.inverse(), Scalar(-7, 5));
  EXPECT_EQ(Scalar(2, 3).pow(3), Scalar(8, 27));
  EXPECT_EQ(Scalar(2, 3).pow(-2), Scalar(9, 4));
  EXPECT_EQ(Scalar(0).pow(0), Scalar(1));
  EXPECT_LT(b, a);
}

TEST(Scalar, ZeroDivisionIsReported) {
  EXPECT_THROW(Scalar(1, 0), DivisionByZero);
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(3) / Scalar(0), DivisionByZero);
}

TEST(Scalar, Parse) {
  EXPECT_EQ(Scalar::parse("3/2"), Scalar(3, 2));
  EXPECT_EQ(Scalar::parse("-4/6"), Scalar(-2, 3));
  EXPECT_EQ(Scalar::parse("17"), Scalar(17));
  EXPECT_THROW(Scalar::parse("x"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("1/0"), DivisionByZero);
}

TEST(RationalBinomial, Examples) {
  EXPECT_EQ(rational_binomial(Scalar(7, 3), 0), Scalar(1));
  EXPECT_EQ(rational_binomial(Scalar(2), 1), Scalar(2));
  EXPECT_EQ(rational_binomial(Scalar(1, 2), 2), Scalar(-1, 8));
  EXPECT_EQ(rational_binomial(Scalar(3), 5), Scalar(0));
  EXPECT_EQ(rational_binomial(Scalar(-1), 4), Scalar(1));
}

TEST(RationalBinomial, AgreesWithProductOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar alpha = oracle::random_rational(rng);
    for (long m = 0; m <= 8; ++m) EXPECT_EQ(rational_binomial(alpha, m), oracle::binomial(alpha, m));
  }
}

TEST(Cyclotomic, PolynomialDegreeIsEulerPhi) {
  for (int k = 1; k <= 30; ++k) EXPECT_EQ(cyclotomic_polynomial(k).degree(), euler_phi(k)) << k;
  EXPECT_EQ(cyclotomic_polynomial(6), Polynomial({Scalar(1), Scalar(-1), Scalar(1)}));
}

TEST(EtaPower, Examples) {
  EXPECT_EQ(eta_power(2, 1), CycloScalar(-1));
  EXPECT_EQ(eta_power(3, 3), CycloScalar(1));
  EXPECT_EQ(eta_power(3, 1) + eta_power(3, 2), CycloScalar(-1));
  EXPECT_EQ(eta_power(1, 5), CycloScalar(1));
}

TEST(EtaPower, ReducesModK) {
  for (int k = 1; k <= 12; ++k)
    for (long e = -2 * k; e <= 2 * k; ++e) {
      const long r = ((e % k) + k) % k;
      EXPECT_EQ(eta_power(k, e), eta_power(k, r));
      EXPECT_EQ(eta_power(k, e) * eta_power(k, -e), CycloScalar(1));
    }
}

TEST(EtaPower, NumericalValue) {
  for (int k = 1; k <= 12; ++k)
    for (long e = 0; e < k; ++e) {
      const auto z = oracle::evaluate(eta_power(k, e));
      const auto expect = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / k);
      EXPECT_NEAR(std::abs(z - expect), 0.0, 1e-9) << k << ' ' << e;
    }
}

TEST(EtaSums, NontrivialCharacterSumsToMinusOne) {
  for (int k = 2; k <= 12; ++k)
    for (long s = 1; s < k; ++s) {
      CycloScalar sum;
      for (long j = 1; j < k; ++j) sum += eta_power(k, j * s);
      EXPECT_EQ(sum, CycloScalar(-1)) << "k=" << k << " s=" << s;
    }
}

TEST(EtaSums, Orthogonality) {
  for (int k = 2; k <= 12; ++k)
    for (long s = 1; s < k; ++s)
      for (long t = 1; t < k; ++t) {
        CycloScalar sum;
        for (long j = 1; j < k; ++j) sum += eta_power(k, j * (s - t));
        EXPECT_EQ(sum, CycloScalar(s == t ? k - 1 : -1));
      }
}

TEST(CycloScalar, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (int k : {3, 4, 5, 7, 8, 9, 12}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto a = random_cyclo(rng, k), b = random_cyclo(rng, k), c = random_cyclo(rng, k);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, CycloScalar());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CycloScalar(1));
        EXPECT_EQ((b / a) * a, b);
      }
      const auto z = oracle::evaluate(a * b) - oracle::evaluate(a) * oracle::evaluate(b);
      EXPECT_LT(std::abs(z), 1e-6);
    }
  }
}

TEST(CycloScalar, ZeroInverseIsReported) {
  EXPECT_THROW(CycloScalar(Scalar(0)).promoted(5).inverse(), DivisionByZero);
  const auto z = eta_power(3, 1) + eta_power(3, 2) + CycloScalar(1);
  EXPECT_TRUE(z.is_zero());
  EXPECT_THROW(CycloScalar(1) / z, DivisionByZero);
}

TEST(CycloScalar, RationalEmbeddingAcrossConductors) {
  const CycloScalar half(Scalar(1, 2));
  EXPECT_EQ(half.promoted(5), half);
  EXPECT_EQ(half.promoted(5) * eta_power(5, 2), eta_power(5, 2) * half);
  EXPECT_TRUE((eta_power(4, 2)).is_rational());
  EXPECT_EQ(eta_power(4, 2), CycloScalar(-1));
  EXPECT_THROW(eta_power(3, 1) + eta_power(5, 1), std::invalid_argument);
  EXPECT_THROW(eta_power(3, 1).promoted(5), std::invalid_argument);
}

TEST(CycloScalar, EmbeddingPreservesArithmetic) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Scalar a = oracle::random_rational(rng), b = oracle::random_rational(rng);
    EXPECT_EQ(CycloScalar(a) + CycloScalar(b), CycloScalar(a + b));
    EXPECT_EQ(CycloScalar(a).promoted(7) * CycloScalar(b).promoted(7), CycloScalar(a * b));
  }
}
