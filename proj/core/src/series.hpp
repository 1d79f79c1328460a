#pragma once

// Internal summation engine shared by the power series in the library.

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "mittag/errors.hpp"
#include "mittag/special_functions.hpp"

namespace mittag::detail {

// Terms and partial sums are carried in extended precision. Alternating
// series lose roughly log10(sum|terms| / |sum|) digits, and the extra bits
// keep that loss below double rounding for moderately cancelling sums.
using ext = long double;

struct ExtLog {
  ext log_abs = 0.0L;
  int sign = 1;  // 0 encodes an exact zero
};

inline bool is_pole(ext x) { return x <= 0.0L && x == std::floor(x); }

/// log|Gamma(x)| with sign; throws PoleError at the poles.
inline ExtLog ext_log_gamma(ext x) {
  if (is_pole(x)) {
    throw PoleError("Gamma pole at x = " + std::to_string(static_cast<double>(x)));
  }
  int sign = 1;
  const ext lg = boost::math::lgamma(x, &sign);
  return {lg, sign};
}

/// log|1/Gamma(x)| with sign; sign 0 at the poles.
inline ExtLog ext_log_rgamma(ext x) {
  if (is_pole(x)) return {0.0L, 0};
  const ExtLog g = ext_log_gamma(x);
  return {-g.log_abs, g.sign};
}

/// Largest log-magnitude of a single term before we declare overflow.
inline constexpr ext kMaxLogTerm = 700.0L;

/// Neumaier-compensated accumulator with the termination rule
/// "|term| < rel_tol * |S| for three consecutive terms, or |term| < abs_floor".
class SeriesSum {
 public:
  SeriesSum(const SeriesConfig& cfg, const char* what) : cfg_(cfg), what_(what) {}

  /// Adds a term given as sign * exp(log_abs). Returns true once converged.
  /// Terms flagged `structural_zero` (a reciprocal gamma evaluated at a pole)
  /// contribute nothing and do not count towards termination.
  bool add_log(int sign, ext log_abs, bool structural_zero = false) {
    if (structural_zero) {
      ++terms_;
      consecutive_ = 0;
      return false;
    }
    if (sign != 0 && log_abs > kMaxLogTerm) {
      throw DomainError(std::string(what_) +
                        ": series term overflows double precision");
    }
    return add(sign == 0 ? 0.0L : sign * std::exp(log_abs));
  }

  bool add(ext term) {
    if (!std::isfinite(term)) {
      throw DomainError(std::string(what_) + ": non-finite series term");
    }
    ++terms_;
    const ext t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
    abs_sum_ += std::abs(term);
    if (first_nonzero_ == 0.0L && term != 0.0L) first_nonzero_ = std::abs(term);

    const ext mag = std::abs(term);
    if (mag < cfg_.abs_floor) {
      converged_ = true;
    } else if (mag < cfg_.rel_tol * std::abs(value())) {
      if (++consecutive_ >= 3) converged_ = true;
    } else {
      consecutive_ = 0;
    }
    return converged_;
  }

  bool converged() const { return converged_; }
  std::size_t terms() const { return terms_; }
  ext value() const { return sum_ + comp_; }
  ext abs_sum() const { return abs_sum_; }

  /// Validates convergence and the cancellation budget.
  SeriesResult finish() const {
    if (!converged_) {
      throw NonConvergence(std::string(what_) + ": no convergence within " +
                           std::to_string(cfg_.max_terms) + " terms");
    }
    const ext v = value();
    const ext scale = std::max(std::abs(v), first_nonzero_);
    if (scale > 0.0 && abs_sum_ > cfg_.max_cancellation * scale) {
      throw DomainError(std::string(what_) +
                        ": catastrophic cancellation (term sum exceeds result "
                        "scale by more than the configured limit)");
    }
    const ext eps = std::numeric_limits<ext>::epsilon();
    // Each term carries a few hundred extended ulps from its log-gamma
    // evaluation; the final rounding to double adds one more ulp.
    const double rounding = static_cast<double>(256.0L * eps * abs_sum_);
    return {static_cast<double>(v),
            rounding + std::numeric_limits<double>::epsilon() * std::abs(static_cast<double>(v)),
            terms_};
  }

 private:
  const SeriesConfig& cfg_;
  const char* what_;
  ext sum_ = 0.0L;
  ext comp_ = 0.0L;
  ext abs_sum_ = 0.0L;
  ext first_nonzero_ = 0.0L;
  std::size_t terms_ = 0;
  int consecutive_ = 0;
  bool converged_ = false;
};

}  // namespace mittag::detail
