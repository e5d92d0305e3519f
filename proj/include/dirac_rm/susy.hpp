#pragma once

#include <span>
#include <vector>

#include "dirac_rm/types.hpp"

namespace dirac_rm {

/// W(r) = Q1 + Q2 e^{2ar} / (e^{2ar} + 1) with Q2 = -2 alpha beta and
/// Q1 = V2eff/Q2 - Q2/2.
struct Superpotential {
  double q1 = 0.0;
  double q2 = 0.0;
  double alpha = 1.0;
  double v2_eff = 0.0;

  /// Restriction conditions Q1 > 0 and Q2 < 0.
  bool valid() const { return q1 > 0.0 && q2 < 0.0; }
};

/// Shift parameters a_k = a0 - k * step with step = 2 alpha, and the
/// remainders R(a_1) .. R(a_n).
struct ShiftChain {
  double a0 = 0.0;
  double step = 0.0;
  std::vector<double> remainders;

  double a(int k) const { return a0 - k * step; }
};

/// Ground-state orientation. `paper_literal` is exp(-int W) with W as
/// given; `normalizable` flips the sign of W so the zero mode decays
/// on the full line whenever Q1 > 0 and Q1 + Q2 < 0.
enum class GroundStateMode { paper_literal, normalizable };

/// beta = (-1 + sqrt(1 + 4 V1 (M + E - Cs) / a^2)) / 2 for spin, and
/// (-1 + sqrt(1 - 4 V1 (M - E + Cps) / a^2)) / 2 for pseudospin.
/// Throws BranchError on a negative discriminant.
double beta_param(double v1, double alpha, double mass, double energy, double c,
                  SymmetryLimit limit);
/// Principal-branch version for the PT case.
cplx beta_param_complex(double v1, double alpha, double mass, cplx energy, double c,
                        SymmetryLimit limit);

double q2_of(double alpha, double beta);
/// Throws DegenerateShift when q2 == 0.
double q1_of(double v2_eff, double q2);

Superpotential make_superpotential(double alpha, double beta, double v2_eff);

double superpotential_value(const Superpotential& sp, double r);
double superpotential_derivative(const Superpotential& sp, double r);

double ground_state_unnormalized(const Superpotential& sp, double r, GroundStateMode mode);
/// Natural log of ground_state_unnormalized, safe for large |r|.
double ground_state_log(const Superpotential& sp, double r, GroundStateMode mode);

/// E0 = -Q1^2 - V2eff.
double ground_energy(const Superpotential& sp);

struct PartnerPair {
  double plus;   // W^2 + W'
  double minus;  // W^2 - W'
};

PartnerPair partner_potentials(const Superpotential& sp, double r);

/// Superpotential from the same family with Q2 replaced by `a`.
Superpotential shifted(const Superpotential& sp, double a);

ShiftChain make_shift_chain(double a0, double alpha, int n, double v2_eff);

/// R(a_k) = (V2/a_{k-1} - a_{k-1}/2)^2 - (V2/a_k - a_k/2)^2.
double remainder(const ShiftChain& chain, int k, double v2_eff);

struct ShiftedEnergy {
  double summed;      // explicit sum of remainders
  double telescoped;  // closed form
  double total;       // telescoped + E0, the Schrodinger-level eigenvalue
};

/// Telescoped spectrum of the shape-invariant chain, both routes.
ShiftedEnergy shifted_energy(const ShiftChain& chain, int n, double v2_eff);

/// Maximum absolute residual over a grid with the scale it should be
/// compared against (1 + max of the reference magnitude).
struct GridResidual {
  double max_abs = 0.0;
  double scale = 1.0;

  double relative() const { return max_abs / scale; }
};

/// max_r |W^2 - W' - (V1eff sech^2 + V2eff tanh - E0)|. In normalizable
/// orientation W is replaced by -W (the sign that makes the ground state
/// decay), in paper_literal orientation the printed W is used as is.
GridResidual riccati_residual(const Superpotential& sp, double v1_eff, double v2_eff, double e0,
                        std::span<const double> grid,
                        GroundStateMode orientation = GroundStateMode::normalizable);

/// max_r |U+(r; a0) - U-(r; a1) - R(a1)| with a1 = a0 - shift.
/// shift defaults to 2 alpha.
GridResidual shape_invariance_residual(const Superpotential& sp,
                                       std::span<const double> grid);
GridResidual shape_invariance_residual(const Superpotential& sp, std::span<const double> grid,
                                 double shift);

}  // namespace dirac_rm
