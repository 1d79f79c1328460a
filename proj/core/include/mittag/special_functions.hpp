#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mittag {

/// Parameters of the three-parameter Mittag-Leffler function
///
///   E^gamma_{nu,mu}(z) = sum_k (gamma)_k z^k / (k! Gamma(mu + k nu)).
///
/// gamma = 1 gives the two-parameter function E_{nu,mu}, and additionally
/// mu = 1 the classical E_nu. mu may be zero or negative: 1/Gamma is entire,
/// so terms at its poles simply vanish.
struct MLParams {
  double nu = 1.0;
  double mu = 1.0;
  double gamma = 1.0;

  /// Throws DomainError unless nu > 0, gamma != 0 and all values finite.
  void validate() const;
};

/// Truncation and safety limits shared by every power series in the library.
struct SeriesConfig {
  /// Stop once |term| < rel_tol * |partial sum| for three consecutive terms.
  double rel_tol = 1e-14;
  std::size_t max_terms = 10'000;
  /// Terms below this magnitude also terminate the series.
  double abs_floor = 1e-300;
  /// Mittag-Leffler and Wright arguments with |z| above this are refused.
  double max_abs_arg = 50.0;
  /// Refuse results whose absolute term sum exceeds the result scale by
  /// more than this factor (catastrophic cancellation).
  double max_cancellation = 1e10;

  void validate() const;
};

/// A summed series with a rounding-error estimate.
struct SeriesResult {
  double value = 0.0;
  /// Rounding-error estimate, driven by the sum of |terms| in the
  /// extended-precision accumulator plus the final rounding to double.
  double error_estimate = 0.0;
  std::size_t terms = 0;
};

/// Rising factorial (gamma)_k = gamma (gamma + 1) ... (gamma + k - 1).
double pochhammer(double gamma, unsigned k);

/// E^gamma_{nu,mu}(z) for real z with |z| <= cfg.max_abs_arg.
double ml_eval(const MLParams& params, double z, const SeriesConfig& cfg = {});
SeriesResult ml_eval_detailed(const MLParams& params, double z,
                              const SeriesConfig& cfg = {});

/// Hartley-Lorenzo F-function F_q(-a, t) = t^{q-1} E_{q,q}(-a t^q).
double f_function(double q, double a, double t, const SeriesConfig& cfg = {});
/// The same function summed directly as sum (-a)^n t^{(n+1)q-1} / Gamma(q+nq).
double f_function_series(double q, double a, double t,
                         const SeriesConfig& cfg = {});

/// Lorenzo-Hartley R-function
///   R_{nu,mu}(a, delta, t) = (t-delta)^{nu-mu-1} E_{nu,nu-mu}[a (t-delta)^nu]
/// for t > delta > 0 and nu > mu.
double r_function(double nu, double mu, double a, double delta, double t,
                  const SeriesConfig& cfg = {});
/// Direct series sum a^n (t-delta)^{(n+1)nu-mu-1} / Gamma[(n+1)nu - mu].
double r_function_series(double nu, double mu, double a, double delta,
                         double t, const SeriesConfig& cfg = {});

/// A gamma-function parameter pair (c, C) entering as Gamma(c + C s).
struct GammaPair {
  double offset = 0.0;
  double scale = 1.0;
};

/// Parameters of Wright's generalized hypergeometric function p_psi_q.
struct WrightParams {
  std::vector<GammaPair> upper;
  std::vector<GammaPair> lower;

  /// Requires positive scales and 1 + sum(lower scales) - sum(upper) >= 0.
  void validate() const;
};

/// p_psi_q(z) = sum_k prod Gamma(a_j + A_j k) / prod Gamma(b_j + B_j k) z^k/k!.
double wright_eval(const WrightParams& params, double z,
                   const SeriesConfig& cfg = {});

/// Wright parameters ((1,1); (beta, alpha)) reproducing E_{alpha,beta}.
WrightParams ml_as_wright(double alpha, double beta);

/// Confluent hypergeometric 1F1(gamma1; beta1; x) by its power series.
double hyp1f1(double gamma1, double beta1, double x,
              const SeriesConfig& cfg = {});

/// Parameters of g1(x) = sum (gamma1)_k / ((beta1)_k k!) x^k / Gamma(beta + k alpha).
struct G1Params {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma1 = 1.0;
  double beta1 = 1.0;
};

double g1_series(const G1Params& params, double x,
                 const SeriesConfig& cfg = {});

/// Orders and parameters of the Fox H-function H^{m,n}_{p,q}.
/// upper holds the p pairs (a_j, A_j), lower the q pairs (b_j, B_j).
struct HFunctionParams {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<GammaPair> upper;
  std::vector<GammaPair> lower;

  std::size_t p() const { return upper.size(); }
  std::size_t q() const { return lower.size(); }
  void validate() const;
};

/// Mellin-Barnes integrand of the H-function:
///
///   g(s) = prod_{j<=m} Gamma(b_j + B_j s) prod_{j<=n} Gamma(1 - a_j - A_j s)
///        / (prod_{j>m} Gamma(1 - b_j - B_j s) prod_{j>n} Gamma(a_j + A_j s)).
///
/// Throws PoleError when any gamma argument sits on a pole.
std::complex<double> h_integrand(const HFunctionParams& params,
                                 std::complex<double> s);

/// H^{1,1}_{1,2}[(0,1); (0,1), (1-beta, alpha)], which equals E_{alpha,beta}(-z).
HFunctionParams ml_as_h_function(double alpha, double beta);

}  // namespace mittag
