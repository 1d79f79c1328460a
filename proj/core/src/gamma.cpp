#include "mittag/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "mittag/errors.hpp"

namespace mittag {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_log_gamma(cplx z) {
  // Valid for Re(z) >= 0.5.
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log(sin(pi z)) modulo 2*pi*i, stable for large |Im z|.
cplx log_sin_pi(cplx z) {
  // sin(pi z) is 2-periodic; reduce the real part exactly.
  const double shift = 2.0 * std::round(z.real() / 2.0);
  z = cplx(z.real() - shift, z.imag());
  if (std::abs(z.imag()) < 8.0) {
    return std::log(std::sin(kPi * z));
  }
  if (z.imag() < 0.0) {
    return std::conj(log_sin_pi(std::conj(z)));
  }
  // sin(pi z) = (exp(-i pi z) / (-2i)) * (1 - exp(2 i pi z)), |exp(2 i pi z)| < 1.
  const cplx i(0.0, 1.0);
  const cplx w = std::exp(2.0 * i * kPi * z);
  return -i * kPi * z - std::log(cplx(0.0, -2.0)) + std::log(1.0 - w);
}

}  // namespace

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

bool is_gamma_pole(double x, double tol) {
  if (x > 0.5) return false;
  const double nearest = std::round(x);
  return std::abs(x - nearest) <= tol * std::max(1.0, std::abs(x));
}

SignedLog log_gamma_signed(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("log_gamma_signed: non-finite argument");
  }
  if (is_gamma_pole(x)) {
    throw PoleError("Gamma pole at x = " + std::to_string(x));
  }
  int sign = 1;
  const double lg = boost::math::lgamma(x, &sign);
  return {lg, sign};
}

SignedLog log_rgamma_signed(double x) {
  if (is_gamma_pole(x)) {
    return {-std::numeric_limits<double>::infinity(), 0};
  }
  const SignedLog g = log_gamma_signed(x);
  return {-g.log_abs, g.sign};
}

cplx log_gamma(cplx z, double pole_tol) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (std::abs(z.imag()) <= pole_tol * std::max(1.0, std::abs(z.real())) &&
      is_gamma_pole(z.real(), pole_tol)) {
    throw PoleError("Gamma pole at s-dependent argument " +
                    std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
  }
  return lanczos_log_gamma(z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

}  // namespace mittag
