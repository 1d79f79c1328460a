#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mittag/kinetics.hpp"

namespace mittag::fracint {

/// Product-integration settings for the Riemann-Liouville integral
///
///   0D_t^{-nu} f(t) = 1/Gamma(nu) int_0^t (t-u)^{nu-1} f(u) du.
///
/// f is written as u^leading_power * g(u). The kernel (t-u)^{nu-1} u^lambda
/// is integrated exactly (incomplete beta functions) against a piecewise
/// linear interpolant of g on a mesh graded towards u = 0.
struct FracIntConfig {
  /// Number of cells; the base step is h = t / steps.
  std::size_t steps = 512;
  /// lambda > -1 in f(u) = u^lambda g(u). With lambda != 0, g(0) is
  /// extrapolated and f is never sampled at u = 0.
  double leading_power = 0.0;
  /// sigma in g(u) - g(0) ~ u^sigma near 0; 1 for smooth g.
  double regularity = 1.0;
  /// Upper bound on the mesh grading exponent.
  double max_grading = 4.0;

  void validate() const;
  /// Grading exponent r of the mesh u_j = t (j / steps)^r.
  double grading() const;
};

/// Precomputed weights for a fixed (nu, config); reusable for every t.
class RLQuadrature {
 public:
  RLQuadrature(double nu, const FracIntConfig& cfg);

  /// 0D_t^{-nu} f(t). Throws QuadratureFailure on non-finite samples.
  double integrate(const std::function<double(double)>& f, double t) const;

  std::span<const double> nodes() const { return nodes_; }

 private:
  double nu_;
  FracIntConfig cfg_;
  std::vector<double> nodes_;    // s_j in [0, 1]
  std::vector<double> weights_;  // already divided by Gamma(nu)
};

/// One-shot Riemann-Liouville integral; nu == 0 returns f(t).
/// Throws DomainError for t <= 0 or nu < 0.
double rl_integral(const std::function<double(double)>& f, double nu, double t,
                   const FracIntConfig& cfg = {});

/// For each t: N(t) - source(t) + c^nu 0D_t^{-nu} N(t). The leading power and
/// regularity of `cfg` are replaced by the values implied by the problem
/// (t^{mu-1} singularity, series in t^nu).
std::vector<double> residual_check(const kinetics::KineticProblem& problem,
                                   const std::function<double(double)>& solution,
                                   std::span<const double> t_grid,
                                   const FracIntConfig& cfg = {});

}  // namespace mittag::fracint
