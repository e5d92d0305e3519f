#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dirac_rm/potentials.hpp"
#include "dirac_rm/types.hpp"

namespace dirac_rm {

struct Symmetry {
  SymmetryLimit limit = SymmetryLimit::Spin;
  double c = 0.0;  // Cs for spin, Cps for pseudospin

  static Symmetry spin(double cs) { return {SymmetryLimit::Spin, cs}; }
  static Symmetry pseudospin(double cps) { return {SymmetryLimit::Pseudospin, cps}; }

  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

struct ModelConfig {
  double mass = 1.0;
  Symmetry symmetry;
  PotentialParams params;
  /// Defaults to the mass gap where the Schrodinger-level energy is
  /// negative, pulled in by 1e-6 at each end.
  std::optional<std::pair<double, double>> search_window;
  double tolerance = 1e-10;
  int scan_points = 2000;
  int max_scan_points = 16000;

  std::pair<double, double> window() const;
  void validate() const;
  int kappa() const { return symmetry.limit == SymmetryLimit::Spin ? -1 : 1; }

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

struct ValidityFlags {
  bool beta_real = false;
  bool node_condition = false;  // Re(beta) - n > 0
  bool decay = false;           // both asymptotic decay rates positive
  bool restrictions = false;    // Q1 > 0 and Q2 < 0

  bool all() const { return beta_real && node_condition && decay && restrictions; }
};

struct BoundState {
  int n = 0;
  int kappa = -1;
  cplx energy;
  cplx beta;
  /// Decay-consistent exponent (beta - n + V2eff / (2 a^2 (beta - n))) / 2.
  cplx lambda;
  double q1 = 0.0;
  double q2 = 0.0;
  ValidityFlags flags;
  double residual = 0.0;
  /// Set for pseudospin n = 0, outside the usual n >= 1 range.
  bool outside_stated_range = false;
};

EffectiveCoefficients effective_coefficients(const ModelConfig& cfg, cplx e);

/// beta(E) on the real branch (BranchError when complex) or, for PT
/// variants, on the principal complex branch.
cplx beta_of(const ModelConfig& cfg, cplx e);

/// f(E) = -E_eff - V2eff^2 / (4 a^2 (beta - n)^2) - a^2 (beta - n)^2.
/// Equivalent to the sigma form of the energy equation with sigma = +1
/// (Rosen-Morse, Eckart), -1 (PT), and the V2 term dropped (reflectionless).
cplx energy_residual(const ModelConfig& cfg, int n, cplx e);

struct SolveDiagnostics {
  int scan_points_used = 0;
  int skipped_points = 0;  // non-finite residuals
  int brackets = 0;
};

std::vector<BoundState> solve_energy(const ModelConfig& cfg, int n,
                                     SolveDiagnostics* diagnostics = nullptr,
                                     Exec exec = Exec::parallel);

std::vector<cplx> default_pt_seeds(const ModelConfig& cfg);

struct ComplexSolveDiagnostics {
  int seeds_tried = 0;
  int seeds_converged = 0;
};

std::vector<BoundState> solve_energy_complex(const ModelConfig& cfg, int n,
                                             const std::vector<cplx>& seeds,
                                             ComplexSolveDiagnostics* diagnostics = nullptr);

/// Number of consecutive n = 0, 1, ... with at least one root.
int count_states(const ModelConfig& cfg);

/// Spin(Cs, V1, V2) <-> Pseudospin(-Cs, -V1, -V2), window mirrored.
ModelConfig duality_map(const ModelConfig& cfg);

/// Builds the full BoundState record (flags, lambda, Q's) at a given energy.
BoundState make_bound_state(const ModelConfig& cfg, int n, cplx energy);

/// Uniform scan of f(E) over the window; NaN marks points outside the
/// real-beta / node-condition domain. Exposed for the serial/parallel
/// equivalence tests and the benchmark.
std::vector<double> scan_residual(const ModelConfig& cfg, int n, int points, Exec exec);

}  // namespace dirac_rm
