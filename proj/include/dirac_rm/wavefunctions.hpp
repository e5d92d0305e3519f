#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dirac_rm/grid.hpp"
#include "dirac_rm/spectrum.hpp"
#include "dirac_rm/types.hpp"

namespace dirac_rm {

/// paper_literal: x^lambda (1+y)^beta 2F1(2beta+n, 2lambda-n; 2lambda+1; -y)
/// with lambda = (n + beta + ...)/2. corrected: decay-consistent lambda, (1+y)^-beta
/// and the terminating 2F1(-n, 2lambda-2beta+n; 2lambda+1; -y).
/// Here y = exp(-2 alpha r).
enum class WaveMode { paper_literal, corrected };

std::string_view to_string(WaveMode m);
std::optional<WaveMode> wave_mode_from_string(std::string_view name);

struct SpinorSample {
  double r = 0.0;
  cplx f;
  cplx g;
  bool singular = false;  // coupling term 1/r undefined (r == 0)
};

struct ResidualReport {
  double ode = 0.0;      // Schrodinger-like equation, relative
  double coupled = 0.0;  // the Dirac equation not used to build the partner component
};

struct SpinorSet {
  BoundState state;
  ModelConfig model;
  WaveMode mode = WaveMode::corrected;
  Geometry geometry = Geometry::FullLine;
  double spacing = 0.0;
  std::vector<SpinorSample> samples;
  /// Trapezoid value of int (|F|^2 + |G|^2) dr over the current samples.
  double norm = 0.0;
  /// Accumulated scale applied by normalize (1 when never normalized).
  double normalization = 1.0;
  /// exp(i pi lambda) carried by the raw samples; 1 after normalize.
  cplx phase{1.0, 0.0};
  ResidualReport residual_report;
};

/// Component value and its r-derivative.
struct ComponentValue {
  cplx value;
  cplx derivative;
};

cplx lambda_param(const ModelConfig& cfg, const BoundState& state, WaveMode mode);

/// The component that obeys the Schrodinger-like equation: F for spin,
/// G for pseudospin. Includes the exp(i pi lambda) phase.
ComponentValue schrodinger_component(const ModelConfig& cfg, const BoundState& state, double r,
                                     WaveMode mode);

cplx upper_component_spin(const ModelConfig& cfg, const BoundState& state, double r,
                          WaveMode mode);
/// G = (dF/dr - F/r) / (M + E - Cs), dF/dr analytic.
cplx lower_from_upper_spin(const ModelConfig& cfg, const BoundState& state, double r,
                           WaveMode mode);

cplx lower_component_pseudospin(const ModelConfig& cfg, const BoundState& state, double r,
                                WaveMode mode);
/// F = (dG/dr - G/r) / (M - E + Cps), dG/dr analytic.
cplx upper_from_lower_pseudospin(const ModelConfig& cfg, const BoundState& state, double r,
                                 WaveMode mode);

/// (d/dr - 1/r) applied to a component value, divided by the coupling.
/// Throws SingularPoint at r == 0 and DegenerateCoupling when the
/// coupling vanishes.
cplx partner_component(const ModelConfig& cfg, const BoundState& state, double r,
                       const ComponentValue& c);

SpinorSet sample_spinor(const ModelConfig& cfg, const BoundState& state, const Grid& grid,
                        WaveMode mode, Exec exec = Exec::parallel);

/// Composite trapezoid of |F|^2 + |G|^2 over segments whose end points
/// are both finite and not singular.
double trapezoid_norm(const SpinorSet& set);

/// Divides out the phase and rescales to unit norm. Throws
/// NonNormalizable for non-finite samples, a vanishing norm, or a
/// Schrodinger-like component that has not decayed at an open end.
SpinorSet normalize(const SpinorSet& set);

/// max |-P'' + (V1eff sech^2 + V2eff tanh - Eeff) P| / max |Eeff P| with
/// P'' from 5-point differences; the coupled residual skips |r| < 0.05/alpha.
/// Throws InvalidArgument below 50 samples. Non-finite samples give +inf.
ResidualReport ode_residual(const SpinorSet& set, const EffectiveCoefficients& eff);
ResidualReport ode_residual(const SpinorSet& set);

}  // namespace dirac_rm
