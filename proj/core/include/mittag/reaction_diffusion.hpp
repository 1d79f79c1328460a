#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mittag/special_functions.hpp"

namespace mittag::rd {

/// Linear telegraph-type reaction-diffusion equation on a periodic domain
///
///   N_tt + a N_t = nu2 N_xx + xi^2 N,   x in [0, length),
///
/// with N(x, 0) = initial_profile and N_t(x, 0) = initial_velocity sampled at
/// x_i = i * length / modes.
struct RDProblem {
  double a = 0.0;
  double nu2 = 1.0;
  double xi = 0.0;
  double length = 1.0;
  std::size_t modes = 64;
  std::vector<double> initial_profile;
  /// Empty means zero initial velocity.
  std::vector<double> initial_velocity;
  /// Output times, non-negative and non-decreasing.
  std::vector<double> times;
  /// Limits for the Mittag-Leffler series of every spatial mode. Mode k
  /// needs |z| = |b_k| t^2, so the argument bound is wider than the library
  /// default; the cancellation guard still rejects inaccurate sums.
  SeriesConfig series{.max_abs_arg = 400.0};
  std::size_t outer_terms = 64;

  void validate() const;
};

/// Per-mode data of the spectral solve.
struct ModeInfo {
  long index = 0;         ///< signed mode number
  double wavenumber = 0;  ///< 2 pi index / length
  double a = 0;           ///< damping, the 'a' of p^2 + a p + b
  double b = 0;           ///< nu2 k^2 - xi^2
  bool propagated = false;  ///< false when the mode carries no initial energy
};

struct RDSolution {
  std::vector<double> x;
  std::vector<double> times;
  /// times.size() rows of x.size() values.
  std::vector<double> field;
  std::vector<ModeInfo> mode_info;
  /// InstabilityWarning messages (growing modes with b < 0).
  std::vector<std::string> warnings;
  /// max |Im| / max |Re| of the inverse spatial transform (spectral only).
  double imag_residue = 0.0;

  double at(std::size_t time_index, std::size_t x_index) const {
    return field[time_index * x.size() + x_index];
  }
  std::span<const double> row(std::size_t time_index) const {
    return {field.data() + time_index * x.size(), x.size()};
  }
};

/// Samples of sum_j [cos_j cos(k_j x) + sin_j sin(k_j x)] on the problem grid,
/// with k_j = 2 pi mode_j / length.
struct FourierComponent {
  long mode = 1;
  double cos_amplitude = 0.0;
  double sin_amplitude = 0.0;
};
std::vector<double> sample_fourier(std::span<const FourierComponent> components,
                                   double length, std::size_t points);

/// Laplace-Fourier solution: every spatial mode has the image
///   [(p + a) N0_k + N1_k] / (p^2 + a p + b_k),
/// inverted with the three-term Mittag-Leffler series.
RDSolution rd_solve_spectral(const RDProblem& problem);

/// Second-order central-difference reference solver. Requires
/// dt <= dx / sqrt(nu2); throws StabilityError otherwise.
RDSolution rd_solve_fd(const RDProblem& problem, double dt);

/// Forward DFT magnitudes |F_k| / modes of a real periodic sample vector.
std::vector<double> spectrum_magnitudes(std::span<const double> samples);

}  // namespace mittag::rd
