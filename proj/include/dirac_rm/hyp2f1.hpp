#pragma once

#include "dirac_rm/types.hpp"

namespace dirac_rm {

/// Gauss hypergeometric arguments: complex a, b, c and real x.
/// Native range is x in [-1, 0]; x < -1 goes through the Pfaff
/// continuation and is flagged as such.
struct Hyp2F1Args {
  cplx a;
  cplx b;
  cplx c;
  double x = 0.0;
};

struct Hyp2F1Result {
  cplx value;
  int terms = 0;
  /// Evaluated at x < -1, where the transformed argument lies in (0.5, 1)
  /// and the series may converge slowly.
  bool continued = false;
};

/// 2F1(a, b; c; x). Direct series for x in (-0.5, 0]; Pfaff transform
/// (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)) for x <= -0.5.
/// Throws PoleInC, NoConvergence, or InvalidArgument (x > 0).
cplx hyp2f1(const Hyp2F1Args& args);
Hyp2F1Result hyp2f1_detailed(const Hyp2F1Args& args);

/// d/dx 2F1(a, b; c; x) = (ab/c) 2F1(a+1, b+1; c+1; x).
cplx hyp2f1_derivative(const Hyp2F1Args& args);

namespace detail {

/// Kahan-compensated power series at |z| < 1, no range dispatch.
Hyp2F1Result hyp2f1_series(cplx a, cplx b, cplx c, double z);
/// Pfaff-transformed evaluation, valid for any x < 1.
Hyp2F1Result hyp2f1_pfaff(cplx a, cplx b, cplx c, double x);

bool is_nonpositive_integer(cplx z);

}  // namespace detail

}  // namespace dirac_rm
