#include "mittag/reaction_diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "mittag/errors.hpp"
#include "mittag/kinetics.hpp"

namespace mittag::rd {
namespace {

using cplx = std::complex<double>;

// Owning complex-to-complex FFTW transform of a fixed size.
class Dft {
 public:
  Dft(std::size_t n, int direction)
      : n_(n),
        in_(fftw_alloc_complex(n), fftw_free),
        out_(fftw_alloc_complex(n), fftw_free),
        plan_(fftw_plan_dft_1d(static_cast<int>(n), in_.get(), out_.get(), direction,
                               FFTW_ESTIMATE),
              fftw_destroy_plan) {
    if (!plan_) throw DomainError("FFTW plan creation failed");
  }

  std::vector<cplx> operator()(std::span<const cplx> input) {
    for (std::size_t i = 0; i < n_; ++i) {
      in_.get()[i][0] = input[i].real();
      in_.get()[i][1] = input[i].imag();
    }
    fftw_execute(plan_.get());
    std::vector<cplx> result(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      result[i] = {out_.get()[i][0], out_.get()[i][1]};
    }
    return result;
  }

 private:
  std::size_t n_;
  std::unique_ptr<fftw_complex, decltype(&fftw_free)> in_;
  std::unique_ptr<fftw_complex, decltype(&fftw_free)> out_;
  std::unique_ptr<std::remove_pointer_t<fftw_plan>, decltype(&fftw_destroy_plan)> plan_;
};

std::vector<cplx> to_complex(std::span<const double> v) {
  return {v.begin(), v.end()};
}

long signed_mode(std::size_t j, std::size_t n) {
  return j <= n / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n);
}

std::vector<double> grid_points(const RDProblem& problem) {
  std::vector<double> x(problem.modes);
  const double dx = problem.length / static_cast<double>(problem.modes);
  for (std::size_t i = 0; i < problem.modes; ++i) x[i] = static_cast<double>(i) * dx;
  return x;
}

// (p + a)/(p^2 + a p + b) and 1/(p^2 + a p + b) inverted at time t.
struct ModeResponse {
  double displacement;  // multiplies N0_k
  double velocity;      // multiplies N1_k
};

ModeResponse mode_response(double a, double b, double t, const RDProblem& problem) {
  if (t == 0.0) return {1.0, 0.0};
  kinetics::ThreeTermTransform l3{2.0, 1.0, a, b, kinetics::Numerator::AlphaMinusOne};
  kinetics::ThreeTermTransform l4{2.0, 1.0, a, b, kinetics::Numerator::BetaMinusOne};
  const double m3 = kinetics::invert_three_term(l3, t, problem.outer_terms, problem.series);
  const double m4 = kinetics::invert_three_term(l4, t, problem.outer_terms, problem.series);
  return {m3 + a * m4, m4};
}

}  // namespace

void RDProblem::validate() const {
  if (!std::isfinite(a) || !std::isfinite(xi)) {
    throw DomainError("RDProblem: a and xi must be finite");
  }
  if (!std::isfinite(nu2) || !(nu2 > 0.0)) throw DomainError("RDProblem: nu2 must be positive");
  if (!std::isfinite(length) || !(length > 0.0)) {
    throw DomainError("RDProblem: length must be positive");
  }
  if (modes < 2 || (modes & (modes - 1)) != 0) {
    throw DomainError("RDProblem: modes must be a power of two >= 2");
  }
  if (initial_profile.size() != modes) {
    throw DomainError("RDProblem: initial_profile must have `modes` samples");
  }
  if (!initial_velocity.empty() && initial_velocity.size() != modes) {
    throw DomainError("RDProblem: initial_velocity must be empty or have `modes` samples");
  }
  for (double v : initial_profile) {
    if (!std::isfinite(v)) throw DomainError("RDProblem: non-finite initial profile");
  }
  for (double v : initial_velocity) {
    if (!std::isfinite(v)) throw DomainError("RDProblem: non-finite initial velocity");
  }
  if (times.empty()) throw DomainError("RDProblem: at least one output time required");
  double previous = 0.0;
  for (double t : times) {
    if (!std::isfinite(t) || t < previous) {
      throw DomainError("RDProblem: times must be non-negative and non-decreasing");
    }
    previous = t;
  }
  series.validate();
}

std::vector<double> sample_fourier(std::span<const FourierComponent> components,
                                   double length, std::size_t points) {
  std::vector<double> out(points, 0.0);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = length * static_cast<double>(i) / static_cast<double>(points);
    for (const auto& c : components) {
      const double k = 2.0 * std::numbers::pi * static_cast<double>(c.mode) / length;
      out[i] += c.cos_amplitude * std::cos(k * x) + c.sin_amplitude * std::sin(k * x);
    }
  }
  return out;
}

RDSolution rd_solve_spectral(const RDProblem& problem) {
  problem.validate();
  const std::size_t n = problem.modes;
  Dft forward(n, FFTW_FORWARD);
  Dft backward(n, FFTW_BACKWARD);

  const std::vector<cplx> n0_hat = forward(to_complex(problem.initial_profile));
  std::vector<cplx> n1_hat(n, 0.0);
  if (!problem.initial_velocity.empty()) {
    n1_hat = forward(to_complex(problem.initial_velocity));
  }
  double amplitude = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    amplitude = std::max({amplitude, std::abs(n0_hat[j]), std::abs(n1_hat[j])});
  }
  const double negligible = 1e-13 * amplitude;

  RDSolution sol;
  sol.x = grid_points(problem);
  sol.times = problem.times;
  sol.field.reserve(problem.times.size() * n);
  sol.mode_info.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    ModeInfo& info = sol.mode_info[j];
    info.index = signed_mode(j, n);
    info.wavenumber = 2.0 * std::numbers::pi * static_cast<double>(info.index) / problem.length;
    info.a = problem.a;
    info.b = problem.nu2 * info.wavenumber * info.wavenumber - problem.xi * problem.xi;
    info.propagated = std::abs(n0_hat[j]) > negligible || std::abs(n1_hat[j]) > negligible;
    if (info.propagated && info.b < 0.0) {
      sol.warnings.push_back("InstabilityWarning: mode " + std::to_string(info.index) +
                             " has b = " + std::to_string(info.b) +
                             " < 0 and grows in time");
    }
  }

  double max_re = 0.0;
  double max_im = 0.0;
  for (double t : problem.times) {
    // Modes k and -k share b_k; evaluate the response once per |index|.
    std::map<long, ModeResponse> responses;
    std::vector<cplx> hat(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const ModeInfo& info = sol.mode_info[j];
      if (!info.propagated) continue;
      const long key = std::labs(info.index);
      auto it = responses.find(key);
      if (it == responses.end()) {
        it = responses.emplace(key, mode_response(info.a, info.b, t, problem)).first;
      }
      hat[j] = n0_hat[j] * it->second.displacement + n1_hat[j] * it->second.velocity;
    }
    const std::vector<cplx> values = backward(hat);
    for (const cplx& v : values) {
      const cplx scaled = v / static_cast<double>(n);
      sol.field.push_back(scaled.real());
      max_re = std::max(max_re, std::abs(scaled.real()));
      max_im = std::max(max_im, std::abs(scaled.imag()));
    }
  }
  sol.imag_residue = max_re > 0.0 ? max_im / max_re : max_im;
  return sol;
}

RDSolution rd_solve_fd(const RDProblem& problem, double dt) {
  problem.validate();
  const std::size_t n = problem.modes;
  const double dx = problem.length / static_cast<double>(n);
  if (!std::isfinite(dt) || !(dt > 0.0)) throw DomainError("rd_solve_fd: dt must be positive");
  if (dt > dx / std::sqrt(problem.nu2) * (1.0 + 1e-12)) {
    throw StabilityError("rd_solve_fd: dt exceeds the CFL bound dx / sqrt(nu2)");
  }

  const std::vector<double>& u0 = problem.initial_profile;
  const std::vector<double> v0 =
      problem.initial_velocity.empty() ? std::vector<double>(n, 0.0) : problem.initial_velocity;
  const double xi2 = problem.xi * problem.xi;
  const double a = problem.a;

  // nu2 u_xx + xi^2 u
  const auto rhs = [&](const std::vector<double>& u, std::size_t i) {
    const double left = u[(i + n - 1) % n];
    const double right = u[(i + 1) % n];
    return problem.nu2 * (left - 2.0 * u[i] + right) / (dx * dx) + xi2 * u[i];
  };

  RDSolution sol;
  sol.x = grid_points(problem);
  sol.times = problem.times;
  sol.field.reserve(problem.times.size() * n);

  for (double target : problem.times) {
    if (target == 0.0) {
      sol.field.insert(sol.field.end(), u0.begin(), u0.end());
      continue;
    }
    const auto steps = static_cast<std::size_t>(std::ceil(target / dt - 1e-9));
    const double h = target / static_cast<double>(steps);

    std::vector<double> prev = u0;
    std::vector<double> curr(n);
    // Taylor start: u(h) = u0 + h v0 + h^2/2 (rhs(u0) - a v0).
    for (std::size_t i = 0; i < n; ++i) {
      curr[i] = u0[i] + h * v0[i] + 0.5 * h * h * (rhs(u0, i) - a * v0[i]);
    }
    std::vector<double> next(n);
    const double lhs = 1.0 / (h * h) + a / (2.0 * h);
    for (std::size_t s = 1; s < steps; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        next[i] = (rhs(curr, i) + (2.0 * curr[i] - prev[i]) / (h * h) +
                   a * prev[i] / (2.0 * h)) /
                  lhs;
      }
      std::swap(prev, curr);
      std::swap(curr, next);
    }
    sol.field.insert(sol.field.end(), curr.begin(), curr.end());
  }
  return sol;
}

std::vector<double> spectrum_magnitudes(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n == 0) return {};
  Dft forward(n, FFTW_FORWARD);
  const std::vector<cplx> hat = forward(to_complex(samples));
  std::vector<double> mags(n);
  for (std::size_t j = 0; j < n; ++j) mags[j] = std::abs(hat[j]) / static_cast<double>(n);
  return mags;
}

}  // namespace mittag::rd
