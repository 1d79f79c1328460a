#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "mittag/errors.hpp"
#include "mittag/gamma.hpp"
#include "support/oracles.hpp"

using namespace mittag;

TEST(Gamma, SignedLogMatchesStdLgamma) {
  for (double x : {0.3, 1.0, 2.5, 7.25, 40.0, -0.5, -1.5, -2.7, -10.2}) {
    const SignedLog g = log_gamma_signed(x);
    EXPECT_NEAR(g.log_abs, std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
    EXPECT_EQ(g.sign, std::tgamma(x) > 0 ? 1 : -1) << x;
  }
}

TEST(Gamma, PolesThrowAndReciprocalVanishes) {
  for (double x : {0.0, -1.0, -2.0, -17.0}) {
    EXPECT_TRUE(is_gamma_pole(x));
    EXPECT_THROW(log_gamma_signed(x), PoleError);
    EXPECT_EQ(log_rgamma_signed(x).sign, 0);
    EXPECT_EQ(log_rgamma_signed(x).value(), 0.0);
  }
  EXPECT_FALSE(is_gamma_pole(-1.0 + 1e-6));
  EXPECT_TRUE(is_gamma_pole(-1.0 + 1e-6, 1e-5));
}

TEST(Gamma, ComplexAgreesWithRealOnTheAxis) {
  for (double x : {0.1, 0.5, 1.0, 3.3, 12.0, -0.4, -3.6}) {
    const std::complex<double> g = gamma({x, 0.0});
    EXPECT_LT(oracle::relative_error(g.real(), std::tgamma(x)), 1e-13) << x;
    EXPECT_NEAR(g.imag(), 0.0, 1e-13 * std::abs(g.real()));
  }
}

TEST(Gamma, ModulusOnImaginaryUnit) {
  // |Gamma(i)|^2 = pi / sinh(pi)
  const double want = std::numbers::pi / std::sinh(std::numbers::pi);
  EXPECT_LT(oracle::relative_error(std::norm(gamma({0.0, 1.0})), want), 1e-13);
}

TEST(Gamma, ReflectionFormulaOffTheAxis) {
  oracle::Draws draw(11);
  for (int i = 0; i < 200; ++i) {
    const std::complex<double> z(draw(-4.0, 5.0), draw(-3.0, 3.0));
    const std::complex<double> lhs = gamma(z) * gamma(1.0 - z);
    const std::complex<double> rhs = oracle::reflection(z);
    EXPECT_LT(std::abs(lhs - rhs), 1e-11 * std::abs(rhs)) << z;
  }
}

TEST(Gamma, RecurrenceAndConjugateSymmetry) {
  oracle::Draws draw(12);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> z(draw(-6.0, 8.0), draw(-10.0, 10.0));
    const std::complex<double> g = gamma(z);
    EXPECT_LT(std::abs(gamma(z + 1.0) - z * g), 1e-12 * std::abs(z * g)) << z;
    EXPECT_LT(std::abs(gamma(std::conj(z)) - std::conj(g)), 1e-14 * std::abs(g)) << z;
  }
}

TEST(Gamma, ComplexPoleThrows) {
  EXPECT_THROW(log_gamma({-3.0, 0.0}), PoleError);
  EXPECT_THROW(log_gamma({-3.0 + 1e-14, 1e-14}), PoleError);
  EXPECT_NO_THROW(log_gamma({-3.0, 1e-6}));
}

TEST(Gamma, LargeArgumentLogDoesNotOverflow) {
  const std::complex<double> lg = log_gamma({400.0, 30.0});
  EXPECT_TRUE(std::isfinite(lg.real()));
  EXPECT_NEAR(log_gamma({400.0, 0.0}).real(), std::lgamma(400.0), 1e-10 * std::lgamma(400.0));
}
