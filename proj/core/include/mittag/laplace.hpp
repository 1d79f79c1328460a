#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mittag/special_functions.hpp"

namespace mittag::laplace {

using cplx = std::complex<double>;

// Closed-form Laplace images. Powers of p use the principal branch, which is
// positive real on the positive real axis.

/// Gamma density image (1 + beta p)^{-alpha}.
struct GammaPower {
  double alpha = 1.0;
  double beta = 1.0;
};

/// Two-sided Laplace density image (1 - beta^2 p^2)^{-1}.
struct LaplaceDensity {
  double beta = 1.0;
};

/// One (alpha_i, beta_i) gamma factor of a residual variable.
struct GammaFactor {
  double alpha = 1.0;
  double beta = 1.0;
};

/// Residual u = sum inputs - sum outputs of independent gamma variables:
/// prod_i (1 + beta_i p)^{-alpha_i} * prod_j (1 - beta_j p)^{-alpha_j}.
struct ResidualProduct {
  std::vector<GammaFactor> inputs;
  std::vector<GammaFactor> outputs;
};

/// N0 / (p [1 + (c/p)^nu]) = N0 p^{nu-1} / (p^nu + c^nu).
struct MLBasic {
  double n0 = 1.0;
  double c = 1.0;
  double nu = 1.0;
};

/// N0 / (p^{mu - nu(gamma+1)} (p^nu + c^nu)^{gamma+1}); the inverse is
/// N0 t^{mu-1} E^{gamma+1}_{nu,mu}(-c^nu t^nu). gamma = 0 covers the
/// power-source equation (with n0 carrying the Gamma(mu) factor).
struct MLGeneral {
  double n0 = 1.0;
  double c = 1.0;
  double nu = 1.0;
  double mu = 1.0;
  double gamma = 0.0;
};

/// N0 / (p^mu [1 + (c/p)^nu] [1 + (d/p)^nu]).
struct TwoRateProduct {
  double n0 = 1.0;
  double c = 1.0;
  double d = 1.0;
  double nu = 1.0;
  double mu = 1.0;
};

/// p^{alpha-1} / (p^alpha + a p^beta + b).
struct ThreeTermAlpha {
  double alpha = 2.0;
  double beta = 1.0;
  double a = 0.0;
  double b = 1.0;
};

/// p^{beta-1} / (p^alpha + a p^beta + b).
struct ThreeTermBeta {
  double alpha = 2.0;
  double beta = 1.0;
  double a = 0.0;
  double b = 1.0;
};

using TransformDescriptor =
    std::variant<GammaPower, LaplaceDensity, ResidualProduct, MLBasic, MLGeneral,
                 TwoRateProduct, ThreeTermAlpha, ThreeTermBeta>;

std::string_view kind_name(const TransformDescriptor& d);

/// Checks parameter positivity constraints; throws DomainError.
void validate(const TransformDescriptor& d);

/// True for images of two-sided densities (finite strip of convergence
/// around the imaginary axis) rather than causal functions.
bool is_two_sided(const TransformDescriptor& d);

/// Closed-form value at complex p. One-sided kinds are continued analytically
/// off their branch cut; two-sided kinds are only defined inside their strip.
/// Throws DomainError outside the region of validity, PoleError at poles.
cplx lt_eval(const TransformDescriptor& d, cplx p);

/// Principal power p^e. Throws DomainError on the negative real axis for
/// non-integer e and PoleError for p == 0 with e < 0.
cplx principal_pow(cplx p, double e);

struct QuadratureConfig {
  double rel_tol = 1e-11;
  double abs_tol = 1e-15;
  /// Length of the first segment [0, T1]; 0 selects max(1, 2/p).
  double first_span = 0.0;
  /// Maximum number of doubling segments appended after [0, T1].
  std::size_t max_segments = 60;
};

/// Numerical forward transform int_0^inf e^{-pt} f(t) dt, p > 0. f may carry
/// an integrable power singularity at 0. Throws QuadratureFailure.
double lt_forward_numeric(const std::function<double(double)>& f, double p,
                          const QuadratureConfig& cfg = {});

struct InversionConfig {
  /// Contour node count (multiple of 4); the self-check compares against
  /// 3 * nodes / 4. Larger counts amplify rounding (about exp(0.17 nodes)).
  std::size_t nodes = 64;
  /// Relative accuracy the self-check enforces (times 10).
  double rel_target = 1e-8;
  /// Shift of the contour to the right (use when singularities have
  /// positive real part).
  double shift = 0.0;

  void validate() const;
};

/// Inversion of an arbitrary causal image along an optimised Talbot contour.
/// Throws InversionFailure when dropping to 3/4 of the nodes changes the
/// result by more than 10 * rel_target (relative, plus a rounding allowance).
double lt_invert_numeric(const std::function<cplx(cplx)>& image, double t,
                         const InversionConfig& cfg = {});

/// Descriptor overload: causal kinds use the Talbot contour, two-sided kinds
/// are inverted along the imaginary axis (Fourier inversion) and return the
/// density value at t.
double lt_invert_numeric(const TransformDescriptor& d, double t,
                         const InversionConfig& cfg = {});

std::vector<double> lt_invert_numeric(const TransformDescriptor& d,
                                      std::span<const double> grid,
                                      const InversionConfig& cfg = {});

/// Bromwich inversion along Re p = 0 for images analytic on a strip that
/// contains the imaginary axis; valid for any real t != 0.
double lt_invert_bilateral(const std::function<cplx(cplx)>& image, double t,
                           double rel_target = 1e-10);

/// Returns (eta(b p), b^nu eta(p)) for eta(p) = p^nu.
std::pair<double, double> self_similarity_check(double nu, double b, double p);

/// p^{-beta} 1F1(gamma1; beta1; p^{-alpha}), the image of t^{beta-1} g1(t^alpha).
double g1_transform(const G1Params& params, double p, const SeriesConfig& cfg = {});

}  // namespace mittag::laplace
