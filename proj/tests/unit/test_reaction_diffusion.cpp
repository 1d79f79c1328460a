#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "mittag/errors.hpp"
#include "mittag/reaction_diffusion.hpp"
#include "support/oracles.hpp"

using namespace mittag;
using namespace mittag::rd;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

RDProblem single_mode(long mode, std::size_t modes, double a, double xi) {
  RDProblem p;
  p.a = a;
  p.nu2 = 1.0;
  p.xi = xi;
  p.length = kTwoPi;
  p.modes = modes;
  const std::vector<FourierComponent> c{{mode, 1.0, 0.0}};
  p.initial_profile = sample_fourier(c, p.length, modes);
  p.times = {0.0, 0.4, 1.1, 2.0};
  return p;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Spectral, UndampedModeOscillatesAsCosine) {
  const RDProblem p = single_mode(3, 32, 0.0, 0.0);
  const RDSolution s = rd_solve_spectral(p);
  for (std::size_t i = 0; i < p.times.size(); ++i) {
    for (std::size_t j = 0; j < p.modes; ++j) {
      EXPECT_NEAR(s.at(i, j), std::cos(3.0 * p.times[i]) * p.initial_profile[j], 1e-12);
    }
  }
  EXPECT_TRUE(s.warnings.empty());
}

TEST(Spectral, DampedModesFollowTheOscillatorFormula) {
  for (double a : {0.5, 1.5}) {
    RDProblem p = single_mode(2, 16, a, 0.0);
    const std::vector<FourierComponent> v{{2, 0.0, 0.8}};
    p.initial_velocity = sample_fourier(v, p.length, p.modes);
    const RDSolution s = rd_solve_spectral(p);
    const double b = 4.0;
    for (std::size_t i = 1; i < p.times.size(); ++i) {
      const oracle::Oscillator o = oracle::damped_oscillator(a, b, p.times[i]);
      const double amp_cos = o.displacement + a * o.impulse;
      const double amp_sin = 0.8 * o.impulse;
      for (std::size_t j = 0; j < p.modes; ++j) {
        const double x = s.x[j];
        EXPECT_NEAR(s.at(i, j), amp_cos * std::cos(2 * x) + amp_sin * std::sin(2 * x), 1e-9);
      }
    }
  }
}

TEST(Spectral, ModesStayDecoupled) {
  const RDProblem p = single_mode(5, 64, 0.5, 0.5);
  const RDSolution s = rd_solve_spectral(p);
  for (std::size_t i = 0; i < p.times.size(); ++i) {
    const std::vector<double> mags = spectrum_magnitudes(s.row(i));
    const double peak = std::max(mags[5], mags[59]);
    for (std::size_t k = 0; k < mags.size(); ++k) {
      if (k == 5 || k == 59) continue;
      EXPECT_LE(mags[k], 1e-12 * std::max(peak, 1e-300)) << k;
    }
  }
}

TEST(Spectral, FieldIsReal) {
  RDProblem p = single_mode(1, 32, 0.5, 0.5);
  const std::vector<FourierComponent> c{{1, 0.7, -0.2}, {2, 0.1, 0.3}, {4, 0.05, 0.0}};
  p.initial_profile = sample_fourier(c, p.length, p.modes);
  const RDSolution s = rd_solve_spectral(p);
  EXPECT_LE(s.imag_residue, 1e-12);
}

TEST(Spectral, GrowingModesWarn) {
  const RDProblem p = single_mode(1, 16, 0.0, 1.5);
  const RDSolution s = rd_solve_spectral(p);
  ASSERT_FALSE(s.warnings.empty());
  EXPECT_NE(s.warnings.front().find("InstabilityWarning"), std::string::npos);
  // b = 1 - 2.25: cosh growth.
  const double rate = std::sqrt(1.25);
  EXPECT_NEAR(s.at(3, 0), std::cosh(rate * 2.0), 1e-9 * std::cosh(rate * 2.0));
}

TEST(Spectral, ZeroDataStaysZero) {
  RDProblem p = single_mode(1, 16, 0.5, 0.5);
  std::fill(p.initial_profile.begin(), p.initial_profile.end(), 0.0);
  for (double v : rd_solve_spectral(p).field) EXPECT_EQ(v, 0.0);
  for (double v : rd_solve_fd(p, 0.1).field) EXPECT_EQ(v, 0.0);
}

TEST(FiniteDifference, DispersionOfASingleMode) {
  const RDProblem p = single_mode(2, 64, 0.0, 0.0);
  const double dx = p.length / 64.0;
  double previous = 0.0;
  for (double scale : {1.0, 0.5}) {
    RDProblem q = p;
    q.modes = static_cast<std::size_t>(64 / scale);
    q.initial_profile = sample_fourier(std::vector<FourierComponent>{{2, 1.0, 0.0}}, q.length,
                                       q.modes);
    const RDSolution s = rd_solve_fd(q, 0.5 * dx * scale);
    double err = 0.0;
    for (std::size_t i = 0; i < q.times.size(); ++i) {
      for (std::size_t j = 0; j < q.modes; ++j) {
        err = std::max(err, std::abs(s.at(i, j) - std::cos(2 * q.times[i]) * q.initial_profile[j]));
      }
    }
    EXPECT_LT(err, 5e-3);
    if (previous > 0.0) EXPECT_GT(previous / err, 3.5);
    previous = err;
  }
}

TEST(FiniteDifference, ConvergesToSpectralAtSecondOrder) {
  const std::vector<FourierComponent> u0{{1, 0.8, -0.3}, {2, 0.4, 0.25}, {3, -0.2, 0.1}};
  const std::vector<FourierComponent> v0{{1, 0.1, 0.2}};
  std::vector<double> errors;
  for (std::size_t m : {16u, 32u, 64u}) {
    RDProblem p;
    p.a = 0.5;
    p.nu2 = 1.0;
    p.xi = 0.5;
    p.length = kTwoPi;
    p.modes = m;
    p.initial_profile = sample_fourier(u0, p.length, m);
    p.initial_velocity = sample_fourier(v0, p.length, m);
    p.times = {0.5, 1.0, 2.0};
    const RDSolution spectral = rd_solve_spectral(p);
    const RDSolution fd = rd_solve_fd(p, 0.5 * p.length / static_cast<double>(m));
    errors.push_back(max_abs_diff(spectral.field, fd.field));
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    EXPECT_GE(std::log2(errors[i - 1] / errors[i]), 1.8);
  }
}

TEST(FiniteDifference, StabilityBound) {
  const RDProblem p = single_mode(1, 16, 0.0, 0.0);
  const double dx = p.length / 16.0;
  EXPECT_THROW(rd_solve_fd(p, 1.01 * dx), StabilityError);
  EXPECT_NO_THROW(rd_solve_fd(p, dx));
  EXPECT_THROW(rd_solve_fd(p, 0.0), DomainError);
}

TEST(Problem, Validation) {
  RDProblem p = single_mode(1, 16, 0.0, 0.0);
  p.modes = 12;
  EXPECT_THROW(rd_solve_spectral(p), DomainError);
  p = single_mode(1, 16, 0.0, 0.0);
  p.initial_velocity = {1.0, 2.0};
  EXPECT_THROW(rd_solve_spectral(p), DomainError);
  p = single_mode(1, 16, 0.0, 0.0);
  p.times = {1.0, 0.5};
  EXPECT_THROW(rd_solve_spectral(p), DomainError);
  p = single_mode(1, 16, 0.0, 0.0);
  p.nu2 = 0.0;
  EXPECT_THROW(rd_solve_spectral(p), DomainError);
}
