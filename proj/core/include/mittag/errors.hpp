#pragma once

#include <stdexcept>
#include <string>

namespace mittag {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable machine-readable name used in CLI error objects.
  virtual const char* kind() const noexcept { return "Error"; }
};

#define MITTAG_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    using Error::Error;                                             \
    const char* kind() const noexcept override { return #Name; }    \
  }

/// Arguments outside the documented domain of an operation.
MITTAG_DEFINE_ERROR(DomainError);
/// A series did not meet its termination criterion within budget.
MITTAG_DEFINE_ERROR(NonConvergence);
/// A gamma factor or a denominator was evaluated at a pole.
MITTAG_DEFINE_ERROR(PoleError);
/// Numerical quadrature could not reach the requested tolerance.
MITTAG_DEFINE_ERROR(QuadratureFailure);
/// Numerical Laplace inversion failed its node-refinement self-check.
MITTAG_DEFINE_ERROR(InversionFailure);
/// Two rates coincide where a distinct-rate formula was requested.
MITTAG_DEFINE_ERROR(TieError);
/// Explicit time stepping requested with a step above the CFL bound.
MITTAG_DEFINE_ERROR(StabilityError);

#undef MITTAG_DEFINE_ERROR

}  // namespace mittag
