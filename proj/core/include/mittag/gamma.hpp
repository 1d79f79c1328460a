#pragma once

#include <complex>

namespace mittag {

/// A real number stored as sign * exp(log_abs). sign == 0 encodes an exact
/// zero (log_abs is then -inf).
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
};

/// True when x is a non-positive integer within `tol` (absolute, scaled by
/// max(1, |x|)).
bool is_gamma_pole(double x, double tol = 0.0);

/// log|Gamma(x)| together with the sign of Gamma(x). Throws PoleError at the
/// non-positive integers.
SignedLog log_gamma_signed(double x);

/// log|1/Gamma(x)| with sign; exact zero (sign 0) at the poles of Gamma.
SignedLog log_rgamma_signed(double x);

/// Principal-value-free complex log-gamma: exp(log_gamma(z)) == Gamma(z),
/// the imaginary part is only defined modulo 2*pi. Throws PoleError when z is
/// within `pole_tol` of a non-positive integer.
std::complex<double> log_gamma(std::complex<double> z, double pole_tol = 1e-12);

/// Gamma(z) for complex z via log_gamma.
std::complex<double> gamma(std::complex<double> z);

}  // namespace mittag
