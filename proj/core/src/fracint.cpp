#include "mittag/fracint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "mittag/errors.hpp"

namespace mittag::fracint {
namespace {

// int_{x0}^{x1} s^{a-1} (1-s)^{b-1} ds, using the complement near s = 1.
double beta_cell(double a, double b, double x0, double x1) {
  if (x1 <= 0.5) {
    return boost::math::beta(a, b, x1) - boost::math::beta(a, b, x0);
  }
  if (x0 >= 0.5) {
    return boost::math::betac(a, b, x0) - boost::math::betac(a, b, x1);
  }
  return (boost::math::beta(a, b, 0.5) - boost::math::beta(a, b, x0)) +
         (boost::math::betac(a, b, 0.5) - boost::math::betac(a, b, x1));
}

}  // namespace

void FracIntConfig::validate() const {
  if (steps < 2) throw DomainError("FracIntConfig: steps must be >= 2");
  if (!std::isfinite(leading_power) || !(leading_power > -1.0)) {
    throw DomainError("FracIntConfig: leading_power must exceed -1");
  }
  if (!std::isfinite(regularity) || !(regularity > 0.0)) {
    throw DomainError("FracIntConfig: regularity must be positive");
  }
  if (!(max_grading >= 1.0)) throw DomainError("FracIntConfig: max_grading must be >= 1");
}

double FracIntConfig::grading() const {
  const double r = 2.0 / (leading_power + 1.0 + std::min(regularity, 1.0));
  return std::clamp(r, 1.0, max_grading);
}

RLQuadrature::RLQuadrature(double nu, const FracIntConfig& cfg) : nu_(nu), cfg_(cfg) {
  cfg_.validate();
  if (!std::isfinite(nu) || !(nu > 0.0)) {
    throw DomainError("RLQuadrature: nu must be positive");
  }
  const std::size_t n = cfg_.steps;
  const double r = cfg_.grading();
  nodes_.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    nodes_[j] = std::pow(static_cast<double>(j) / static_cast<double>(n), r);
  }
  nodes_[n] = 1.0;

  // On [s_j, s_{j+1}] the interpolant is
  //   g_j (s_{j+1} - s)/ds + g_{j+1} (s - s_j)/ds,
  // integrated against s^lambda (1-s)^{nu-1}.
  const double lam = cfg_.leading_power;
  const double inv_gamma = 1.0 / boost::math::tgamma(nu);
  weights_.assign(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double s0 = nodes_[j];
    const double s1 = nodes_[j + 1];
    const double ds = s1 - s0;
    const double m0 = beta_cell(lam + 1.0, nu, s0, s1);
    const double m1 = beta_cell(lam + 2.0, nu, s0, s1);
    weights_[j] += (s1 * m0 - m1) / ds * inv_gamma;
    weights_[j + 1] += (m1 - s0 * m0) / ds * inv_gamma;
  }
}

double RLQuadrature::integrate(const std::function<double(double)>& f, double t) const {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw DomainError("rl_integral: requires t > 0");
  }
  const double lam = cfg_.leading_power;
  const std::size_t n = nodes_.size() - 1;
  std::vector<double> g(n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    const double u = t * nodes_[j];
    const double v = f(u);
    if (!std::isfinite(v)) {
      throw QuadratureFailure("rl_integral: non-finite sample at u = " + std::to_string(u));
    }
    g[j] = lam == 0.0 ? v : v * std::pow(u, -lam);
  }
  if (lam == 0.0) {
    g[0] = f(0.0);
    if (!std::isfinite(g[0])) {
      throw QuadratureFailure(
          "rl_integral: non-finite sample at u = 0 (set leading_power for singular f)");
    }
  } else {
    // Linear extrapolation of g to the origin.
    const double s1 = nodes_[1];
    const double s2 = nodes_[2];
    g[0] = g[1] - s1 * (g[2] - g[1]) / (s2 - s1);
  }
  double sum = 0.0;
  for (std::size_t j = 0; j <= n; ++j) sum += weights_[j] * g[j];
  return std::pow(t, nu_ + lam) * sum;
}

double rl_integral(const std::function<double(double)>& f, double nu, double t,
                   const FracIntConfig& cfg) {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw DomainError("rl_integral: requires t > 0");
  }
  if (!std::isfinite(nu) || nu < 0.0) {
    throw DomainError("rl_integral: requires nu >= 0");
  }
  if (nu == 0.0) {
    const double v = f(t);
    if (!std::isfinite(v)) throw QuadratureFailure("rl_integral: non-finite f(t)");
    return v;
  }
  return RLQuadrature(nu, cfg).integrate(f, t);
}

std::vector<double> residual_check(const kinetics::KineticProblem& problem,
                                   const std::function<double(double)>& solution,
                                   std::span<const double> t_grid,
                                   const FracIntConfig& cfg) {
  problem.validate();
  FracIntConfig local = cfg;
  local.leading_power =
      problem.kind == kinetics::ProblemKind::Basic ? 0.0 : problem.mu - 1.0;
  local.regularity = problem.nu;
  const RLQuadrature quad(problem.nu, local);
  const double cn = std::pow(problem.c, problem.nu);

  std::vector<double> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("residual_check: grid points must be positive");
    const double integral = quad.integrate(solution, t);
    out.push_back(solution(t) - kinetics::source_term(problem, t) + cn * integral);
  }
  return out;
}

}  // namespace mittag::fracint
