#include "mittag/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "mittag/errors.hpp"

namespace mittag::laplace {
namespace {

constexpr double kPoleTol = 1e-14;

bool finite(double x) { return std::isfinite(x); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, const char* name, std::string_view kind) {
  if (!finite(v) || !(v > 0.0)) {
    throw DomainError(std::string(kind) + ": " + name + " must be positive");
  }
}

void require_finite(double v, const char* name, std::string_view kind) {
  if (!finite(v)) {
    throw DomainError(std::string(kind) + ": " + name + " must be finite");
  }
}

// 1 / w checked against a pole, where `scale` is the size of the parts that
// summed to w.
cplx checked_inverse(cplx w, double scale, std::string_view kind) {
  if (std::abs(w) <= kPoleTol * std::max(scale, 1e-300)) {
    throw PoleError(std::string(kind) + ": p is at a pole of the image");
  }
  return 1.0 / w;
}

// (1 + (c/p)^nu) for the Mittag-Leffler style images, with pole check.
cplx one_plus_ratio(cplx p, double c, double nu, std::string_view kind) {
  const cplx ratio = std::pow(c, nu) * principal_pow(p, -nu);
  const cplx w = 1.0 + ratio;
  if (std::abs(w) <= kPoleTol * (1.0 + std::abs(ratio))) {
    throw PoleError(std::string(kind) + ": p is at a pole of the image");
  }
  return w;
}

cplx eval_gamma_power(double alpha, double beta, cplx p, std::string_view kind) {
  const cplx w = 1.0 + beta * p;
  if (std::abs(w) <= kPoleTol * (1.0 + std::abs(beta * p))) {
    throw PoleError(std::string(kind) + ": p = -1/beta is a singular point");
  }
  return principal_pow(w, -alpha);
}

void require_not_on_cut(cplx p, std::string_view kind) {
  if (p.imag() == 0.0 && p.real() <= 0.0) {
    throw DomainError(std::string(kind) +
                      ": p lies on the branch cut (-inf, 0] of the image");
  }
}

}  // namespace

std::string_view kind_name(const TransformDescriptor& d) {
  return std::visit(
      overloaded{
          [](const GammaPower&) { return std::string_view("GammaPower"); },
          [](const LaplaceDensity&) { return std::string_view("LaplaceDensity"); },
          [](const ResidualProduct&) { return std::string_view("ResidualProduct"); },
          [](const MLBasic&) { return std::string_view("MLBasic"); },
          [](const MLGeneral&) { return std::string_view("MLGeneral"); },
          [](const TwoRateProduct&) { return std::string_view("TwoRateProduct"); },
          [](const ThreeTermAlpha&) { return std::string_view("ThreeTermAlpha"); },
          [](const ThreeTermBeta&) { return std::string_view("ThreeTermBeta"); },
      },
      d);
}

void validate(const TransformDescriptor& d) {
  const std::string_view kind = kind_name(d);
  std::visit(
      overloaded{
          [&](const GammaPower& g) {
            require_positive(g.alpha, "alpha", kind);
            require_positive(g.beta, "beta", kind);
          },
          [&](const LaplaceDensity& g) { require_positive(g.beta, "beta", kind); },
          [&](const ResidualProduct& r) {
            if (r.inputs.empty() && r.outputs.empty()) {
              throw DomainError("ResidualProduct: needs at least one factor");
            }
            for (const auto& f : r.inputs) {
              require_positive(f.alpha, "alpha", kind);
              require_positive(f.beta, "beta", kind);
            }
            for (const auto& f : r.outputs) {
              require_positive(f.alpha, "alpha", kind);
              require_positive(f.beta, "beta", kind);
            }
          },
          [&](const MLBasic& m) {
            require_finite(m.n0, "N0", kind);
            require_positive(m.c, "c", kind);
            require_positive(m.nu, "nu", kind);
          },
          [&](const MLGeneral& m) {
            require_finite(m.n0, "N0", kind);
            require_positive(m.c, "c", kind);
            require_positive(m.nu, "nu", kind);
            require_positive(m.mu, "mu", kind);
            require_finite(m.gamma, "gamma", kind);
            if (m.gamma + 1.0 == 0.0) {
              throw DomainError("MLGeneral: gamma + 1 must be non-zero");
            }
          },
          [&](const TwoRateProduct& m) {
            require_finite(m.n0, "N0", kind);
            require_positive(m.c, "c", kind);
            require_positive(m.d, "d", kind);
            require_positive(m.nu, "nu", kind);
            require_positive(m.mu, "mu", kind);
          },
          [&](const ThreeTermAlpha& m) {
            require_positive(m.alpha, "alpha", kind);
            require_finite(m.beta, "beta", kind);
            require_finite(m.a, "a", kind);
            require_finite(m.b, "b", kind);
          },
          [&](const ThreeTermBeta& m) {
            require_positive(m.alpha, "alpha", kind);
            require_finite(m.beta, "beta", kind);
            require_finite(m.a, "a", kind);
            require_finite(m.b, "b", kind);
          },
      },
      d);
}

bool is_two_sided(const TransformDescriptor& d) {
  if (std::holds_alternative<LaplaceDensity>(d)) return true;
  if (const auto* r = std::get_if<ResidualProduct>(&d)) return !r->outputs.empty();
  return false;
}

cplx principal_pow(cplx p, double e) {
  if (p == cplx(0.0, 0.0)) {
    if (e > 0.0) return 0.0;
    if (e == 0.0) return 1.0;
    throw PoleError("principal_pow: zero raised to a negative power");
  }
  if (e == 0.0) return 1.0;
  const bool integer = e == std::round(e);
  if (p.imag() == 0.0) {
    if (p.real() > 0.0) return std::pow(p.real(), e);
    if (integer) return std::pow(p.real(), e);
    throw DomainError("principal_pow: non-integer power on the negative real axis");
  }
  return std::pow(p, e);
}

cplx lt_eval(const TransformDescriptor& d, cplx p) {
  validate(d);
  const std::string_view kind = kind_name(d);
  return std::visit(
      overloaded{
          [&](const GammaPower& g) -> cplx {
            return eval_gamma_power(g.alpha, g.beta, p, kind);
          },
          [&](const LaplaceDensity& g) -> cplx {
            const cplx bp = g.beta * p;
            const cplx w = 1.0 - bp * bp;
            const cplx inv = checked_inverse(w, 1.0 + std::norm(bp), kind);
            if (std::abs(p.real()) * g.beta >= 1.0) {
              throw DomainError("LaplaceDensity: requires |Re p| < 1/beta");
            }
            return inv;
          },
          [&](const ResidualProduct& r) -> cplx {
            cplx value = 1.0;
            for (const auto& f : r.inputs) {
              value *= eval_gamma_power(f.alpha, f.beta, p, kind);
            }
            for (const auto& f : r.outputs) {
              value *= eval_gamma_power(f.alpha, f.beta, -p, kind);
            }
            if (!r.outputs.empty()) {
              for (const auto& f : r.inputs) {
                if (p.real() * f.beta <= -1.0) {
                  throw DomainError("ResidualProduct: Re p outside the strip");
                }
              }
              for (const auto& f : r.outputs) {
                if (p.real() * f.beta >= 1.0) {
                  throw DomainError("ResidualProduct: Re p outside the strip");
                }
              }
            }
            return value;
          },
          [&](const MLBasic& m) -> cplx {
            require_not_on_cut(p, kind);
            return m.n0 / (p * one_plus_ratio(p, m.c, m.nu, kind));
          },
          [&](const MLGeneral& m) -> cplx {
            require_not_on_cut(p, kind);
            const cplx w = one_plus_ratio(p, m.c, m.nu, kind);
            return m.n0 * principal_pow(p, -m.mu) * principal_pow(w, -(m.gamma + 1.0));
          },
          [&](const TwoRateProduct& m) -> cplx {
            require_not_on_cut(p, kind);
            const cplx wc = one_plus_ratio(p, m.c, m.nu, kind);
            const cplx wd = one_plus_ratio(p, m.d, m.nu, kind);
            return m.n0 * principal_pow(p, -m.mu) / (wc * wd);
          },
          [&](const ThreeTermAlpha& m) -> cplx {
            require_not_on_cut(p, kind);
            const cplx pa = principal_pow(p, m.alpha);
            const cplx pb = m.a * principal_pow(p, m.beta);
            const cplx den = pa + pb + m.b;
            return principal_pow(p, m.alpha - 1.0) *
                   checked_inverse(den, std::abs(pa) + std::abs(pb) + std::abs(m.b),
                                   kind);
          },
          [&](const ThreeTermBeta& m) -> cplx {
            require_not_on_cut(p, kind);
            const cplx pa = principal_pow(p, m.alpha);
            const cplx pb = m.a * principal_pow(p, m.beta);
            const cplx den = pa + pb + m.b;
            return principal_pow(p, m.beta - 1.0) *
                   checked_inverse(den, std::abs(pa) + std::abs(pb) + std::abs(m.b),
                                   kind);
          },
      },
      d);
}

double lt_forward_numeric(const std::function<double(double)>& f, double p,
                          const QuadratureConfig& cfg) {
  if (!finite(p) || !(p > 0.0)) {
    throw DomainError("lt_forward_numeric: requires p > 0");
  }
  const auto integrand = [&](double t) {
    const double v = f(t);
    if (!finite(v)) {
      throw QuadratureFailure("lt_forward_numeric: non-finite integrand at t = " +
                              std::to_string(t));
    }
    return std::exp(-p * t) * v;
  };

  const double first = cfg.first_span > 0.0 ? cfg.first_span : std::max(1.0, 2.0 / p);
  double total = 0.0;
  {
    boost::math::quadrature::tanh_sinh<double> ts;
    double err = 0.0;
    double l1 = 0.0;
    total = ts.integrate(integrand, 0.0, first, cfg.rel_tol, &err, &l1);
    if (!finite(total) || err > std::max(100.0 * cfg.rel_tol * l1, cfg.abs_tol)) {
      throw QuadratureFailure("lt_forward_numeric: tolerance not met on [0, T1]");
    }
  }

  // Doubling segments until two consecutive ones fall below tolerance.
  double lo = first;
  int quiet = 0;
  for (std::size_t s = 0; s < cfg.max_segments; ++s) {
    const double hi = 2.0 * lo;
    double err = 0.0;
    double l1 = 0.0;
    const double part = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, lo, hi, 15, cfg.rel_tol, &err, &l1);
    if (!finite(part) || err > std::max(100.0 * cfg.rel_tol * l1, cfg.abs_tol)) {
      throw QuadratureFailure("lt_forward_numeric: tolerance not met on segment");
    }
    total += part;
    if (l1 <= std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol)) {
      if (++quiet >= 2) return total;
    } else {
      quiet = 0;
    }
    lo = hi;
  }
  throw QuadratureFailure("lt_forward_numeric: tail did not decay within budget");
}

void InversionConfig::validate() const {
  if (nodes < 16 || nodes % 4 != 0) {
    throw DomainError("InversionConfig: nodes must be >= 16 and divisible by 4");
  }
  if (!(rel_target > 0.0)) {
    throw DomainError("InversionConfig: rel_target must be positive");
  }
  if (!finite(shift)) throw DomainError("InversionConfig: shift must be finite");
}

namespace {

struct ContourSum {
  double value;
  double abs_sum;
};

// Optimised cotangent (Talbot-type) contour
//   z(theta) = N/t (-0.6122 + 0.5017 theta cot(0.6407 theta) + 0.2645 i theta)
// with the midpoint rule on (-pi, pi).
ContourSum talbot_sum(const std::function<cplx(cplx)>& image, double t,
                      std::size_t n, double shift) {
  constexpr double kSigma = -0.6122;
  constexpr double kMu = 0.5017;
  constexpr double kAlpha = 0.6407;
  constexpr double kNu = 0.2645;
  const double pi = std::numbers::pi;
  const double scale = static_cast<double>(n) / t;
  cplx sum = 0.0;
  double abs_sum = 0.0;
  // Midpoints theta_k, k = 0..n-1; real images give conjugate pairs, but the
  // full sum is kept so that arbitrary callables are handled.
  for (std::size_t k = 0; k < n; ++k) {
    const double theta =
        -pi + (static_cast<double>(k) + 0.5) * 2.0 * pi / static_cast<double>(n);
    const double at = kAlpha * theta;
    const double cot = std::cos(at) / std::sin(at);
    const double sin2 = std::sin(at) * std::sin(at);
    const cplx z =
        shift + scale * cplx(kSigma + kMu * theta * cot, kNu * theta);
    const cplx dz = scale * cplx(kMu * cot - kMu * at / sin2, kNu);
    const cplx term = std::exp(z * t) * image(z) * dz;
    if (!finite(term.real()) || !finite(term.imag())) {
      throw InversionFailure("lt_invert_numeric: non-finite contour term");
    }
    sum += term;
    abs_sum += std::abs(term);
  }
  // f(t) = 1/(2 pi i) * (2 pi / n) * sum
  const cplx f = sum / (cplx(0.0, 1.0) * static_cast<double>(n));
  return {f.real(), abs_sum / static_cast<double>(n)};
}

}  // namespace

double lt_invert_numeric(const std::function<cplx(cplx)>& image, double t,
                         const InversionConfig& cfg) {
  cfg.validate();
  if (!finite(t) || !(t > 0.0)) {
    throw DomainError("lt_invert_numeric: requires t > 0");
  }
  const ContourSum fine = talbot_sum(image, t, cfg.nodes, cfg.shift);
  const ContourSum coarse = talbot_sum(image, t, cfg.nodes * 3 / 4, cfg.shift);
  const double eps = std::numeric_limits<double>::epsilon();
  const double allowed =
      10.0 * cfg.rel_target * std::abs(fine.value) + 100.0 * eps * fine.abs_sum;
  if (std::abs(fine.value - coarse.value) > allowed) {
    throw InversionFailure("lt_invert_numeric: node-refinement check failed at t = " +
                           std::to_string(t));
  }
  return fine.value;
}

double lt_invert_bilateral(const std::function<cplx(cplx)>& image, double t,
                           double rel_target) {
  if (!finite(t) || t == 0.0) {
    throw DomainError("lt_invert_bilateral: requires finite t != 0");
  }
  // f(t) = 1/pi int_0^inf [Re F(iw) cos(w t) - Im F(iw) sin(w t)] dw
  const double freq = std::abs(t);
  const double sign = t > 0.0 ? 1.0 : -1.0;
  boost::math::quadrature::ooura_fourier_cos<double> cos_integrator(rel_target);
  boost::math::quadrature::ooura_fourier_sin<double> sin_integrator(rel_target);
  const auto re = [&](double w) { return image(cplx(0.0, w)).real(); };
  const auto im = [&](double w) { return image(cplx(0.0, w)).imag(); };
  const auto [c, c_err] = cos_integrator.integrate(re, freq);
  const auto [s, s_err] = sin_integrator.integrate(im, freq);
  const double value = (c - sign * s) / std::numbers::pi;
  const double err = (c_err + s_err) / std::numbers::pi;
  if (!finite(value) || err > 10.0 * rel_target * std::max(std::abs(value), 1e-300)) {
    throw InversionFailure("lt_invert_bilateral: Fourier inversion tolerance not met");
  }
  return value;
}

double lt_invert_numeric(const TransformDescriptor& d, double t,
                         const InversionConfig& cfg) {
  validate(d);
  const auto image = [&d](cplx p) { return lt_eval(d, p); };
  if (is_two_sided(d)) {
    cfg.validate();
    return lt_invert_bilateral(image, t, std::min(cfg.rel_target, 1e-10));
  }
  return lt_invert_numeric(image, t, cfg);
}

std::vector<double> lt_invert_numeric(const TransformDescriptor& d,
                                      std::span<const double> grid,
                                      const InversionConfig& cfg) {
  double previous = 0.0;
  for (double t : grid) {
    if (!(t > previous)) {
      throw DomainError("lt_invert_numeric: grid must be positive and increasing");
    }
    previous = t;
  }
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back(lt_invert_numeric(d, t, cfg));
  return out;
}

std::pair<double, double> self_similarity_check(double nu, double b, double p) {
  if (!(nu > 0.0) || !(b > 0.0) || !(p > 0.0)) {
    throw DomainError("self_similarity_check: requires nu, b, p > 0");
  }
  return {std::pow(b * p, nu), std::pow(b, nu) * std::pow(p, nu)};
}

double g1_transform(const G1Params& params, double p, const SeriesConfig& cfg) {
  if (!(p > 0.0)) throw DomainError("g1_transform: requires p > 0");
  return std::pow(p, -params.beta) *
         hyp1f1(params.gamma1, params.beta1, std::pow(p, -params.alpha), cfg);
}

}  // namespace mittag::laplace
