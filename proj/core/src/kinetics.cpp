#include "mittag/kinetics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "mittag/errors.hpp"
#include "series.hpp"

namespace mittag::kinetics {
namespace {

using cplx = std::complex<double>;

constexpr std::array<std::pair<ProblemKind, std::string_view>, 5> kKindNames = {{
    {ProblemKind::Basic, "Basic"},
    {ProblemKind::PowerSource, "PowerSource"},
    {ProblemKind::MLGammaSource, "MLGammaSource"},
    {ProblemKind::MLSource, "MLSource"},
    {ProblemKind::TwoRate, "TwoRate"},
}};

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

bool rates_tie(double c, double d, double nu) {
  const double cn = std::pow(c, nu);
  const double dn = std::pow(d, nu);
  return std::abs(cn - dn) < kRateTieTolerance * std::max(cn, dn);
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "Unknown";
}

ProblemKind problem_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw DomainError("unknown kinetic problem kind '" + std::string(name) + "'");
}

void KineticProblem::validate() const {
  const std::string where = "KineticProblem(" + std::string(to_string(kind)) + ")";
  if (!std::isfinite(n0) || n0 < 0.0) {
    throw DomainError(where + ": N0 must be finite and non-negative");
  }
  if (!positive(c)) throw DomainError(where + ": c must be positive");
  if (!positive(nu)) throw DomainError(where + ": nu must be positive");
  if (kind != ProblemKind::Basic && !positive(mu)) {
    throw DomainError(where + ": mu must be positive");
  }
  if (kind == ProblemKind::TwoRate) {
    if (!positive(d)) throw DomainError(where + ": d must be positive");
    if (!(mu > nu)) throw DomainError(where + ": requires mu > nu");
  }
  if (kind == ProblemKind::MLGammaSource) {
    if (!std::isfinite(gamma) || gamma == 0.0 || gamma == -1.0) {
      throw DomainError(where + ": gamma must be finite and differ from 0 and -1");
    }
  }
}

double SolutionSeries::operator()(double t, const SeriesConfig& cfg) const {
  if (!(t >= 0.0)) throw DomainError("SolutionSeries: requires t >= 0");
  double sum = 0.0;
  for (const auto& term : terms) {
    const double z = -term.rate * std::pow(t, term.ml.nu);
    sum += term.weight * std::pow(t, term.power) * ml_eval(term.ml, z, cfg);
  }
  return sum;
}

std::vector<double> SolutionSeries::evaluate(std::span<const double> times,
                                             const SeriesConfig& cfg) const {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) out.push_back((*this)(t, cfg));
  return out;
}

SolutionSeries solve(const KineticProblem& problem) {
  problem.validate();
  const double n0 = problem.n0;
  const double nu = problem.nu;
  const double mu = problem.mu;
  const double cn = std::pow(problem.c, nu);
  SolutionSeries s;
  switch (problem.kind) {
    case ProblemKind::Basic:
      s.terms.push_back({n0, 0.0, {nu, 1.0, 1.0}, cn});
      break;
    case ProblemKind::PowerSource:
      s.terms.push_back({n0 * boost::math::tgamma(mu), mu - 1.0, {nu, mu, 1.0}, cn});
      break;
    case ProblemKind::MLGammaSource:
      s.terms.push_back({n0, mu - 1.0, {nu, mu, problem.gamma + 1.0}, cn});
      break;
    case ProblemKind::MLSource:
      s.terms.push_back({n0 / nu, mu - 1.0, {nu, mu - 1.0, 1.0}, cn});
      s.terms.push_back({n0 * (1.0 - mu + nu) / nu, mu - 1.0, {nu, mu, 1.0}, cn});
      break;
    case ProblemKind::TwoRate: {
      if (rates_tie(problem.c, problem.d, nu)) {
        s.terms.push_back({n0, mu - 1.0, {nu, mu, 2.0}, cn});
        s.note = "equal-rate branch: c^nu and d^nu coincide within tolerance";
        break;
      }
      const double dn = std::pow(problem.d, nu);
      const double w = n0 / (cn - dn);
      s.terms.push_back({w, mu - nu - 1.0, {nu, mu - nu, 1.0}, dn});
      s.terms.push_back({-w, mu - nu - 1.0, {nu, mu - nu, 1.0}, cn});
      break;
    }
  }
  return s;
}

double source_term(const KineticProblem& problem, double t, const SeriesConfig& cfg) {
  problem.validate();
  if (!(t > 0.0)) throw DomainError("source_term: requires t > 0");
  const double nu = problem.nu;
  const double mu = problem.mu;
  const double tpow = std::pow(t, mu - 1.0);
  switch (problem.kind) {
    case ProblemKind::Basic:
      return problem.n0;
    case ProblemKind::PowerSource:
      return problem.n0 * tpow;
    case ProblemKind::MLGammaSource:
      return problem.n0 * tpow *
             ml_eval({nu, mu, problem.gamma}, -std::pow(problem.c * t, nu), cfg);
    case ProblemKind::MLSource:
      return problem.n0 * tpow * ml_eval({nu, mu, 1.0}, -std::pow(problem.c * t, nu), cfg);
    case ProblemKind::TwoRate:
      return problem.n0 * tpow * ml_eval({nu, mu, 1.0}, -std::pow(problem.d * t, nu), cfg);
  }
  throw DomainError("source_term: unknown problem kind");
}

laplace::TransformDescriptor transform_of(const KineticProblem& problem) {
  problem.validate();
  const double n0 = problem.n0;
  switch (problem.kind) {
    case ProblemKind::Basic:
      return laplace::MLBasic{n0, problem.c, problem.nu};
    case ProblemKind::PowerSource:
      return laplace::MLGeneral{n0 * boost::math::tgamma(problem.mu), problem.c,
                                problem.nu, problem.mu, 0.0};
    case ProblemKind::MLGammaSource:
      return laplace::MLGeneral{n0, problem.c, problem.nu, problem.mu, problem.gamma};
    case ProblemKind::MLSource:
      return laplace::MLGeneral{n0, problem.c, problem.nu, problem.mu, 1.0};
    case ProblemKind::TwoRate:
      return laplace::TwoRateProduct{n0, problem.c, problem.d, problem.nu, problem.mu};
  }
  throw DomainError("transform_of: unknown problem kind");
}

cplx composed_image(const KineticProblem& problem, cplx p) {
  problem.validate();
  const double n0 = problem.n0;
  const double nu = problem.nu;
  const double mu = problem.mu;
  cplx source = 0.0;
  switch (problem.kind) {
    case ProblemKind::Basic:
      source = n0 / p;
      break;
    case ProblemKind::PowerSource:
      source = n0 * boost::math::tgamma(mu) * laplace::principal_pow(p, -mu);
      break;
    case ProblemKind::MLGammaSource:
      source = laplace::lt_eval(
          laplace::MLGeneral{n0, problem.c, nu, mu, problem.gamma - 1.0}, p);
      break;
    case ProblemKind::MLSource:
      source = laplace::lt_eval(laplace::MLGeneral{n0, problem.c, nu, mu, 0.0}, p);
      break;
    case ProblemKind::TwoRate:
      source = laplace::lt_eval(laplace::MLGeneral{n0, problem.d, nu, mu, 0.0}, p);
      break;
  }
  const cplx ratio = std::pow(problem.c, nu) * laplace::principal_pow(p, -nu);
  return source / (1.0 + ratio);
}

std::pair<cplx, cplx> partial_fraction_split(double c, double d, double nu, cplx p) {
  if (!positive(c) || !positive(d) || !positive(nu)) {
    throw DomainError("partial_fraction_split: c, d, nu must be positive");
  }
  if (rates_tie(c, d, nu)) {
    throw TieError("partial_fraction_split: c^nu and d^nu coincide");
  }
  const double cn = std::pow(c, nu);
  const double dn = std::pow(d, nu);
  const cplx pn = laplace::principal_pow(p, nu);
  const cplx lhs = 1.0 / ((pn + cn) * (pn + dn));
  const cplx rhs = (1.0 / (pn + dn) - 1.0 / (pn + cn)) / (cn - dn);
  return {lhs, rhs};
}

void ThreeTermTransform::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(a) ||
      !std::isfinite(b)) {
    throw DomainError("ThreeTermTransform: non-finite parameter");
  }
  if (!(beta >= 0.0) || !(alpha > beta)) {
    throw DomainError("ThreeTermTransform: requires alpha > beta >= 0");
  }
}

laplace::TransformDescriptor to_descriptor(const ThreeTermTransform& tt) {
  tt.validate();
  if (tt.numerator == Numerator::AlphaMinusOne) {
    return laplace::ThreeTermAlpha{tt.alpha, tt.beta, tt.a, tt.b};
  }
  return laplace::ThreeTermBeta{tt.alpha, tt.beta, tt.a, tt.b};
}

ThreeTermResult invert_three_term_detailed(const ThreeTermTransform& tt, double t,
                                           std::size_t outer_terms,
                                           const SeriesConfig& cfg) {
  tt.validate();
  cfg.validate();
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("invert_three_term: requires t > 0");
  }
  if (outer_terms < 1) throw DomainError("invert_three_term: outer_terms must be >= 1");
  const double gap = tt.alpha - tt.beta;
  if (std::abs(tt.a) * std::pow(t, gap) > kThreeTermGuard) {
    throw DomainError("invert_three_term: |a| t^(alpha-beta) exceeds the divergence guard");
  }

  SeriesConfig outer_cfg = cfg;
  outer_cfg.max_terms = outer_terms;
  detail::SeriesSum sum(outer_cfg, "invert_three_term");
  const double z = -tt.b * std::pow(t, tt.alpha);
  const double shift = tt.numerator == Numerator::AlphaMinusOne ? 0.0 : 1.0;
  double last = 0.0;
  for (std::size_t r = 0; r < outer_terms; ++r) {
    const double rr = static_cast<double>(r);
    double term = 0.0;
    if (r == 0 || tt.a != 0.0) {
      const double power = gap * (rr + shift);
      const MLParams ml{tt.alpha, power + 1.0, rr + 1.0};
      term = std::pow(-tt.a, rr) * std::pow(t, power) * ml_eval(ml, z, cfg);
    }
    last = term;
    if (sum.add(term)) break;
  }
  const SeriesResult res = sum.finish();
  return {res.value, 2.0 * std::abs(last), res.terms};
}

double invert_three_term(const ThreeTermTransform& tt, double t, std::size_t outer_terms,
                         const SeriesConfig& cfg) {
  return invert_three_term_detailed(tt, t, outer_terms, cfg).value;
}

}  // namespace mittag::kinetics
