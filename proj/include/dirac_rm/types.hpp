#pragma once

#include <complex>

namespace dirac_rm {

using cplx = std::complex<double>;

/// Which Dirac limit reduces the coupled radial equations.
enum class SymmetryLimit { Spin, Pseudospin };

/// Execution policy for the data-parallel kernels. `serial` is the
/// reference path; `parallel` must reproduce it bit for bit.
enum class Exec { serial, parallel };

/// Coefficients of -u'' + (v1_eff sech^2(ar) + v2_eff tanh(ar)) u = e_eff u.
struct EffectiveCoefficients {
  cplx v1_eff;
  cplx v2_eff;
  cplx e_eff;
};

}  // namespace dirac_rm
