#include "mittag/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "mittag/errors.hpp"
#include "mittag/gamma.hpp"
#include "series.hpp"

namespace mittag {
namespace {

bool finite(double x) { return std::isfinite(x); }

int parity_sign(double z, std::size_t k) {
  return (z < 0.0 && (k % 2 == 1)) ? -1 : 1;
}

double reciprocal_gamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  return 1.0 / boost::math::tgamma(x);
}

void require_arg_in_domain(double z, const SeriesConfig& cfg, const char* what) {
  if (!finite(z)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
  if (std::abs(z) > cfg.max_abs_arg) {
    throw DomainError(std::string(what) + ": |z| = " + std::to_string(std::abs(z)) +
                      " exceeds the configured bound " +
                      std::to_string(cfg.max_abs_arg));
  }
}

using detail::ext;

// Running log|(gamma)_k| with sign. A zero factor makes every later value 0.
class PochhammerLog {
 public:
  explicit PochhammerLog(double gamma) : gamma_(gamma) {}

  void advance(std::size_t k) {  // moves from (gamma)_{k-1} to (gamma)_k
    const ext factor = gamma_ + static_cast<ext>(k) - 1.0L;
    if (factor == 0.0L) {
      sign_ = 0;
      return;
    }
    log_abs_ += std::log(std::abs(factor));
    if (factor < 0.0L) sign_ = -sign_;
  }

  int sign() const { return sign_; }
  ext log_abs() const { return log_abs_; }

 private:
  ext gamma_;
  ext log_abs_ = 0.0L;
  int sign_ = 1;
};

ext log_abs_ext(double x) { return std::log(std::abs(static_cast<ext>(x))); }

}  // namespace

void MLParams::validate() const {
  if (!finite(nu) || !finite(mu) || !finite(gamma)) {
    throw DomainError("MLParams: non-finite parameter");
  }
  if (nu <= 0.0) throw DomainError("MLParams: nu must be positive");
  if (gamma == 0.0) throw DomainError("MLParams: gamma must be non-zero");
}

void SeriesConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError("SeriesConfig: rel_tol must lie in (0, 1)");
  }
  if (max_terms < 1) throw DomainError("SeriesConfig: max_terms must be >= 1");
  if (!(abs_floor > 0.0)) throw DomainError("SeriesConfig: abs_floor must be positive");
  if (!(max_abs_arg > 0.0)) {
    throw DomainError("SeriesConfig: max_abs_arg must be positive");
  }
  if (!(max_cancellation >= 1.0)) {
    throw DomainError("SeriesConfig: max_cancellation must be >= 1");
  }
}

double pochhammer(double gamma, unsigned k) {
  double result = 1.0;
  for (unsigned i = 0; i < k; ++i) result *= gamma + static_cast<double>(i);
  return result;
}

SeriesResult ml_eval_detailed(const MLParams& params, double z,
                              const SeriesConfig& cfg) {
  params.validate();
  cfg.validate();
  require_arg_in_domain(z, cfg, "ml_eval");
  if (z == 0.0) {
    return {reciprocal_gamma(params.mu), 0.0, 1};
  }

  detail::SeriesSum sum(cfg, "ml_eval");
  PochhammerLog poch(params.gamma);
  const ext log_z = log_abs_ext(z);
  ext log_factorial = 0.0L;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    const ext kk = static_cast<ext>(k);
    if (k > 0) {
      poch.advance(k);
      log_factorial += std::log(kk);
    }
    if (poch.sign() == 0) {
      if (sum.add(0.0L)) break;
      continue;
    }
    const detail::ExtLog rg = detail::ext_log_rgamma(params.mu + kk * params.nu);
    if (rg.sign == 0) {
      sum.add_log(0, 0.0L, /*structural_zero=*/true);
      continue;
    }
    const int sign = poch.sign() * rg.sign * parity_sign(z, k);
    const ext log_abs = poch.log_abs() - log_factorial + kk * log_z + rg.log_abs;
    if (sum.add_log(sign, log_abs)) break;
  }
  return sum.finish();
}

double ml_eval(const MLParams& params, double z, const SeriesConfig& cfg) {
  return ml_eval_detailed(params, z, cfg).value;
}

double f_function(double q, double a, double t, const SeriesConfig& cfg) {
  if (!(q > 0.0) || !(t > 0.0) || !finite(a)) {
    throw DomainError("f_function: requires q > 0, t > 0 and finite a");
  }
  const double tq = std::pow(t, q);
  return std::pow(t, q - 1.0) * ml_eval({q, q, 1.0}, -a * tq, cfg);
}

double f_function_series(double q, double a, double t, const SeriesConfig& cfg) {
  if (!(q > 0.0) || !(t > 0.0) || !finite(a)) {
    throw DomainError("f_function_series: requires q > 0, t > 0 and finite a");
  }
  cfg.validate();
  require_arg_in_domain(a * std::pow(t, q), cfg, "f_function_series");
  const ext log_t = log_abs_ext(t);
  if (a == 0.0) {
    return std::pow(t, q - 1.0) * reciprocal_gamma(q);
  }
  const ext log_a = log_abs_ext(a);
  detail::SeriesSum sum(cfg, "f_function_series");
  for (std::size_t n = 0; n < cfg.max_terms; ++n) {
    const ext nn = static_cast<ext>(n);
    const detail::ExtLog rg = detail::ext_log_rgamma((nn + 1.0L) * q);
    const int sign = rg.sign * parity_sign(-a, n);
    const ext log_abs = nn * log_a + ((nn + 1.0L) * q - 1.0L) * log_t + rg.log_abs;
    if (sum.add_log(sign, log_abs)) break;
  }
  return sum.finish().value;
}

namespace {

void check_r_domain(double nu, double mu, double a, double delta, double t,
                    const char* what) {
  if (!finite(nu) || !finite(mu) || !finite(a) || !finite(delta) || !finite(t)) {
    throw DomainError(std::string(what) + ": non-finite parameter");
  }
  if (!(nu > 0.0)) throw DomainError(std::string(what) + ": nu must be positive");
  if (!(delta > 0.0) || !(t > delta)) {
    throw DomainError(std::string(what) + ": requires t > delta > 0");
  }
  if (!(nu - mu > 0.0)) {
    throw DomainError(std::string(what) + ": requires nu - mu > 0");
  }
}

}  // namespace

double r_function(double nu, double mu, double a, double delta, double t,
                  const SeriesConfig& cfg) {
  check_r_domain(nu, mu, a, delta, t, "r_function");
  const double tau = t - delta;
  return std::pow(tau, nu - mu - 1.0) *
         ml_eval({nu, nu - mu, 1.0}, a * std::pow(tau, nu), cfg);
}

double r_function_series(double nu, double mu, double a, double delta, double t,
                         const SeriesConfig& cfg) {
  check_r_domain(nu, mu, a, delta, t, "r_function_series");
  cfg.validate();
  const double tau = t - delta;
  require_arg_in_domain(a * std::pow(tau, nu), cfg, "r_function_series");
  if (a == 0.0) {
    return std::pow(tau, nu - mu - 1.0) * reciprocal_gamma(nu - mu);
  }
  const ext log_tau = log_abs_ext(tau);
  const ext log_a = log_abs_ext(a);
  detail::SeriesSum sum(cfg, "r_function_series");
  for (std::size_t n = 0; n < cfg.max_terms; ++n) {
    const ext nn = static_cast<ext>(n);
    const ext shift = (nn + 1.0L) * nu - mu;
    const detail::ExtLog rg = detail::ext_log_rgamma(shift);
    const int sign = rg.sign * parity_sign(a, n);
    const ext log_abs = nn * log_a + (shift - 1.0L) * log_tau + rg.log_abs;
    if (sum.add_log(sign, log_abs)) break;
  }
  return sum.finish().value;
}

void WrightParams::validate() const {
  double balance = 1.0;
  for (const auto& g : upper) {
    if (!finite(g.offset) || !(g.scale > 0.0) || !finite(g.scale)) {
      throw DomainError("WrightParams: upper scales must be positive and finite");
    }
    balance -= g.scale;
  }
  for (const auto& g : lower) {
    if (!finite(g.offset) || !(g.scale > 0.0) || !finite(g.scale)) {
      throw DomainError("WrightParams: lower scales must be positive and finite");
    }
    balance += g.scale;
  }
  if (balance < 0.0) {
    throw DomainError(
        "WrightParams: convergence condition 1 + sum(B) - sum(A) >= 0 violated");
  }
}

double wright_eval(const WrightParams& params, double z, const SeriesConfig& cfg) {
  params.validate();
  cfg.validate();
  require_arg_in_domain(z, cfg, "wright_eval");

  detail::SeriesSum sum(cfg, "wright_eval");
  const ext log_z = z == 0.0 ? 0.0L : log_abs_ext(z);
  ext log_factorial = 0.0L;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    const ext kk = static_cast<ext>(k);
    if (k > 0) {
      log_factorial += std::log(kk);
      if (z == 0.0) {
        sum.add(0.0L);
        break;
      }
    }
    int sign = parity_sign(z, k);
    ext log_abs = kk * log_z - log_factorial;
    bool zero = false;
    for (const auto& g : params.upper) {
      const detail::ExtLog lg = detail::ext_log_gamma(g.offset + g.scale * kk);
      sign *= lg.sign;
      log_abs += lg.log_abs;
    }
    for (const auto& g : params.lower) {
      const detail::ExtLog rg = detail::ext_log_rgamma(g.offset + g.scale * kk);
      if (rg.sign == 0) {
        zero = true;
        break;
      }
      sign *= rg.sign;
      log_abs += rg.log_abs;
    }
    if (zero) {
      sum.add_log(0, 0.0L, /*structural_zero=*/true);
      continue;
    }
    if (sum.add_log(sign, log_abs)) break;
  }
  return sum.finish().value;
}

WrightParams ml_as_wright(double alpha, double beta) {
  return WrightParams{{{1.0, 1.0}}, {{beta, alpha}}};
}

double hyp1f1(double gamma1, double beta1, double x, const SeriesConfig& cfg) {
  if (!finite(gamma1) || !finite(beta1) || !finite(x)) {
    throw DomainError("hyp1f1: non-finite argument");
  }
  if (is_gamma_pole(beta1)) {
    throw DomainError("hyp1f1: beta1 must not be a non-positive integer");
  }
  cfg.validate();
  detail::SeriesSum sum(cfg, "hyp1f1");
  ext term = 1.0L;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    if (sum.add(term)) break;
    const ext kk = static_cast<ext>(k);
    term *= (gamma1 + kk) / ((beta1 + kk) * (kk + 1.0L)) * x;
  }
  return sum.finish().value;
}

double g1_series(const G1Params& params, double x, const SeriesConfig& cfg) {
  if (!finite(params.alpha) || !finite(params.beta) || !finite(params.gamma1) ||
      !finite(params.beta1)) {
    throw DomainError("g1_series: non-finite parameter");
  }
  if (!(params.alpha > 0.0)) throw DomainError("g1_series: alpha must be positive");
  if (is_gamma_pole(params.beta1)) {
    throw DomainError("g1_series: beta1 must not be a non-positive integer");
  }
  cfg.validate();
  require_arg_in_domain(x, cfg, "g1_series");
  if (x == 0.0) return reciprocal_gamma(params.beta);

  detail::SeriesSum sum(cfg, "g1_series");
  PochhammerLog upper(params.gamma1);
  PochhammerLog lower(params.beta1);
  const ext log_x = log_abs_ext(x);
  ext log_factorial = 0.0L;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    const ext kk = static_cast<ext>(k);
    if (k > 0) {
      upper.advance(k);
      lower.advance(k);
      log_factorial += std::log(kk);
    }
    if (upper.sign() == 0) {
      if (sum.add(0.0L)) break;
      continue;
    }
    const detail::ExtLog rg = detail::ext_log_rgamma(params.beta + kk * params.alpha);
    if (rg.sign == 0) {
      sum.add_log(0, 0.0L, /*structural_zero=*/true);
      continue;
    }
    const int sign = upper.sign() * lower.sign() * rg.sign * parity_sign(x, k);
    const ext log_abs = upper.log_abs() - lower.log_abs() - log_factorial +
                           kk * log_x + rg.log_abs;
    if (sum.add_log(sign, log_abs)) break;
  }
  return sum.finish().value;
}

void HFunctionParams::validate() const {
  if (n > p()) throw DomainError("HFunctionParams: requires n <= p");
  if (m > q()) throw DomainError("HFunctionParams: requires m <= q");
  for (const auto& g : upper) {
    if (!(g.scale > 0.0) || !finite(g.scale) || !finite(g.offset)) {
      throw DomainError("HFunctionParams: every A_j must be positive and finite");
    }
  }
  for (const auto& g : lower) {
    if (!(g.scale > 0.0) || !finite(g.scale) || !finite(g.offset)) {
      throw DomainError("HFunctionParams: every B_j must be positive and finite");
    }
  }
}

std::complex<double> h_integrand(const HFunctionParams& params,
                                 std::complex<double> s) {
  params.validate();
  std::complex<double> log_g = 0.0;
  for (std::size_t j = 0; j < params.q(); ++j) {
    const auto& b = params.lower[j];
    if (j < params.m) {
      log_g += log_gamma(b.offset + b.scale * s);
    } else {
      log_g -= log_gamma(1.0 - b.offset - b.scale * s);
    }
  }
  for (std::size_t j = 0; j < params.p(); ++j) {
    const auto& a = params.upper[j];
    if (j < params.n) {
      log_g += log_gamma(1.0 - a.offset - a.scale * s);
    } else {
      log_g -= log_gamma(a.offset + a.scale * s);
    }
  }
  return std::exp(log_g);
}

HFunctionParams ml_as_h_function(double alpha, double beta) {
  return HFunctionParams{1, 1, {{0.0, 1.0}}, {{0.0, 1.0}, {1.0 - beta, alpha}}};
}

}  // namespace mittag
