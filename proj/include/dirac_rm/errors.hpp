#pragma once

#include <stdexcept>
#include <string>

namespace dirac_rm {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define DIRAC_RM_ERROR(Name)                                          \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(what) {}           \
    const char* kind() const noexcept override { return #Name; }      \
  }

/// Parameters violate a type invariant (alpha <= 0, bad grid, ...).
DIRAC_RM_ERROR(InvalidArgument);
/// Square-root discriminant negative outside the complex (PT) branch.
DIRAC_RM_ERROR(BranchError);
/// A shift parameter (Q2-type or beta - n) vanished where it is a divisor.
DIRAC_RM_ERROR(DegenerateShift);
/// Lower hypergeometric parameter c is a non-positive integer.
DIRAC_RM_ERROR(PoleInC);
/// Iterative method exhausted its budget.
DIRAC_RM_ERROR(NoConvergence);
/// Evaluation requested at r = 0 where the 1/r coupling term diverges.
DIRAC_RM_ERROR(SingularPoint);
/// Coupling factor M + E - C (or M - E + C) vanished.
DIRAC_RM_ERROR(DegenerateCoupling);
/// Quadrature norm is zero, non-finite, or the state does not decay.
DIRAC_RM_ERROR(NonNormalizable);
/// The oracle found no self-consistent crossing in the window.
DIRAC_RM_ERROR(NoBoundState);

#undef DIRAC_RM_ERROR

}  // namespace dirac_rm
