#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mittag/laplace.hpp"
#include "mittag/special_functions.hpp"

namespace mittag::kinetics {

/// Which fractional production-destruction equation
///   N(t) - source(t) = -c^nu  0D_t^{-nu} N(t)
/// is being solved.
enum class ProblemKind {
  Basic,          ///< source N0
  PowerSource,    ///< source N0 t^{mu-1}
  MLGammaSource,  ///< source N0 t^{mu-1} E^gamma_{nu,mu}(-c^nu t^nu)
  MLSource,       ///< source N0 t^{mu-1} E_{nu,mu}(-c^nu t^nu)
  TwoRate,        ///< source N0 t^{mu-1} E_{nu,mu}(-d^nu t^nu)
};

std::string_view to_string(ProblemKind kind);
/// Parses the names above; throws DomainError for unknown names.
ProblemKind problem_kind_from_string(std::string_view name);

struct KineticProblem {
  ProblemKind kind = ProblemKind::Basic;
  double n0 = 1.0;
  double c = 1.0;
  /// Second rate, TwoRate only.
  double d = 1.0;
  double nu = 1.0;
  /// Source exponent; ignored by Basic.
  double mu = 1.0;
  /// Pochhammer index of the source, MLGammaSource only.
  double gamma = 1.0;

  void validate() const;
};

/// weight * t^power * E^{ml.gamma}_{ml.nu, ml.mu}(-rate * t^{ml.nu})
struct SolutionTerm {
  double weight = 1.0;
  double power = 0.0;
  MLParams ml;
  double rate = 1.0;
};

/// A closed-form time-domain solution as a finite sum of Mittag-Leffler terms.
struct SolutionSeries {
  std::vector<SolutionTerm> terms;
  /// Set when the solver took a special branch (e.g. coinciding rates).
  std::optional<std::string> note;

  /// Value at t >= 0 (infinite at t = 0 when a term has a negative power).
  double operator()(double t, const SeriesConfig& cfg = {}) const;
  std::vector<double> evaluate(std::span<const double> times,
                               const SeriesConfig& cfg = {}) const;
};

/// Relative tie tolerance on |c^nu - d^nu| / max(c^nu, d^nu).
inline constexpr double kRateTieTolerance = 1e-8;

/// Closed-form solution of `problem`.
SolutionSeries solve(const KineticProblem& problem);

/// The source term of the equation evaluated at t > 0.
double source_term(const KineticProblem& problem, double t,
                   const SeriesConfig& cfg = {});

/// Closed-form Laplace image of the solution as a transform descriptor.
laplace::TransformDescriptor transform_of(const KineticProblem& problem);

/// The image of the solution assembled directly from the equation:
/// (image of the source) / (1 + (c/p)^nu).
std::complex<double> composed_image(const KineticProblem& problem,
                                    std::complex<double> p);

/// Both sides of
///   1/((p^nu + c^nu)(p^nu + d^nu)) = [1/(p^nu + d^nu) - 1/(p^nu + c^nu)] / (c^nu - d^nu).
/// Throws TieError when c^nu and d^nu coincide within kRateTieTolerance.
std::pair<std::complex<double>, std::complex<double>> partial_fraction_split(
    double c, double d, double nu, std::complex<double> p);

enum class Numerator {
  AlphaMinusOne,  ///< p^{alpha-1} / (p^alpha + a p^beta + b)
  BetaMinusOne,   ///< p^{beta-1} / (p^alpha + a p^beta + b)
};

struct ThreeTermTransform {
  double alpha = 2.0;
  double beta = 1.0;
  double a = 0.0;
  double b = 1.0;
  Numerator numerator = Numerator::AlphaMinusOne;

  /// Requires alpha > beta >= 0 and finite a, b.
  void validate() const;
};

laplace::TransformDescriptor to_descriptor(const ThreeTermTransform& tt);

struct ThreeTermResult {
  double value = 0.0;
  /// Twice the magnitude of the last outer term summed.
  double tail_estimate = 0.0;
  std::size_t outer_terms_used = 0;
};

/// |a| t^{alpha-beta} above this is refused before summation.
inline constexpr double kThreeTermGuard = 20.0;

/// Inverse transform of a three-term image as the outer series
///   sum_r (-a)^r t^{(alpha-beta) r} E^{r+1}_{alpha,(alpha-beta) r + 1}(-b t^alpha)
/// (numerator p^{alpha-1}) or
///   sum_r (-a)^r t^{(alpha-beta)(r+1)} E^{r+1}_{alpha,(alpha-beta)(r+1) + 1}(-b t^alpha)
/// (numerator p^{beta-1}).
ThreeTermResult invert_three_term_detailed(const ThreeTermTransform& tt, double t,
                                           std::size_t outer_terms = 64,
                                           const SeriesConfig& cfg = {});

double invert_three_term(const ThreeTermTransform& tt, double t,
                         std::size_t outer_terms = 64, const SeriesConfig& cfg = {});

}  // namespace mittag::kinetics
