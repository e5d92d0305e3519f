#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dirac_rm/errors.hpp"
#include "dirac_rm/hyp2f1.hpp"
#include "dirac_rm/susy.hpp"
#include "dirac_rm/wavefunctions.hpp"

using namespace dirac_rm;

namespace {

ModelConfig spin_set() {
  ModelConfig m;
  m.mass = 5.0;
  m.symmetry = Symmetry::spin(0.0);
  m.params = PotentialParams::rosen_morse(4.0, 1.0, 1.0);
  return m;
}

ModelConfig reflectionless_set(int gamma, double mass) {
  ModelConfig m;
  m.mass = mass;
  m.symmetry = Symmetry::spin(0.0);
  m.params = PotentialParams::reflectionless(gamma, 1.0);
  return m;
}

BoundState physical(const ModelConfig& m, int n) {
  for (const auto& s : solve_energy(m, n)) {
    if (s.flags.all()) return s;
  }
  throw std::runtime_error("no physical root");
}

double k_spin(const ModelConfig& m, const BoundState& s) {
  return m.mass + s.energy.real() - m.symmetry.c;
}

}  // namespace

TEST(Lambda, BothModes) {
  const ModelConfig m = spin_set();
  const BoundState s = physical(m, 1);
  const double shift = s.beta.real() - 1.0;
  const double tilt = k_spin(m, s) / (2.0 * shift);
  EXPECT_NEAR(lambda_param(m, s, WaveMode::corrected).real(), 0.5 * (shift + tilt), 1e-14);
  EXPECT_NEAR(lambda_param(m, s, WaveMode::paper_literal).real(),
              0.5 * (1.0 + s.beta.real() + tilt), 1e-14);
  EXPECT_EQ(lambda_param(m, s, WaveMode::corrected), s.lambda);
}

TEST(Lambda, NoTiltGroundStateAgrees) {
  const ModelConfig m = reflectionless_set(2, 5.0);
  const BoundState s = physical(m, 0);
  EXPECT_NEAR(lambda_param(m, s, WaveMode::corrected).real(), s.beta.real() / 2.0, 1e-15);
  EXPECT_NEAR(lambda_param(m, s, WaveMode::paper_literal).real(), s.beta.real() / 2.0, 1e-15);
}

TEST(Lambda, ReflectionlessExcitedState) {
  const ModelConfig m = reflectionless_set(3, 5.0);
  const BoundState s = make_bound_state(m, 1, 2.0);
  EXPECT_NEAR(lambda_param(m, s, WaveMode::paper_literal).real(), (1.0 + s.beta.real()) / 2.0, 1e-14);
  EXPECT_NEAR(lambda_param(m, s, WaveMode::corrected).real(), (s.beta.real() - 1.0) / 2.0, 1e-14);
}

TEST(Upper, GroundStateIsSusyZeroMode) {
  const ModelConfig m = spin_set();
  const BoundState s = physical(m, 0);
  const auto eff = effective_coefficients(m, s.energy);
  const Superpotential sp = make_superpotential(1.0, s.beta.real(), eff.v2_eff.real());
  const Grid grid = full_line_grid(1.0);
  const SpinorSet set = normalize(sample_spinor(m, s, grid, WaveMode::corrected, Exec::serial));
  const double c = set.samples[1000].f.real() /
                   ground_state_unnormalized(sp, 0.0, GroundStateMode::normalizable);
  double worst = 0.0;
  for (const auto& x : set.samples) {
    const double f0 = ground_state_unnormalized(sp, x.r, GroundStateMode::normalizable);
    worst = std::max(worst, std::abs(x.f - c * f0));
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(Upper, DecayRateAtLargeR) {
  const ModelConfig m = spin_set();
  for (int n = 0; n < 3; ++n) {
    const BoundState s = physical(m, n);
    const Grid grid = uniform_grid(10.0, 15.0, 201, Geometry::HalfLine);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double r : grid.r) {
      const double y = std::log(std::abs(upper_component_spin(m, s, r, WaveMode::corrected)));
      sx += r;
      sy += y;
      sxx += r * r;
      sxy += r * y;
    }
    const double k = static_cast<double>(grid.size());
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    EXPECT_NEAR(slope, -2.0 * s.lambda.real(), 1e-3) << "n=" << n;
  }
}

TEST(Upper, OriginValuePaperLiteral) {
  const ModelConfig m = spin_set();
  const BoundState s = physical(m, 1);
  const cplx lam = lambda_param(m, s, WaveMode::paper_literal);
  const cplx expected = std::exp(cplx(0.0, std::numbers::pi) * lam) * std::pow(2.0, s.beta.real()) *
                        hyp2f1({2.0 * s.beta + 1.0, 2.0 * lam - 1.0, 2.0 * lam + 1.0, -1.0});
  const cplx got = upper_component_spin(m, s, 0.0, WaveMode::paper_literal);
  EXPECT_LE(std::abs(got - expected), 1e-12 * std::abs(expected));
}

TEST(Upper, OriginValueCorrected) {
  const ModelConfig m = spin_set();
  const BoundState s = physical(m, 1);
  const cplx lam = s.lambda;
  // 2F1(-1, b; c; -1) = 1 + b / c
  const cplx poly = 1.0 + (2.0 * lam - 2.0 * s.beta + 1.0) / (2.0 * lam + 1.0);
  const cplx expected =
      std::exp(cplx(0.0, std::numbers::pi) * lam) * std::pow(2.0, -s.beta.real()) * poly;
  const cplx got = upper_component_spin(m, s, 0.0, WaveMode::corrected);
  EXPECT_LE(std::abs(got - expected), 1e-13 * std::abs(expected));
}

TEST(Lower, MatchesFiniteDifference) {
  const ModelConfig m = spin_set();
  const BoundState s = physical(m, 1);
  const double k = k_spin(m, s);
  const double h = 1e-6;
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 300; ++i) {
    const double r = 0.1 + (15.0 - 0.1) * i / 299.0;
    const cplx f = upper_component_spin(m, s, r, WaveMode::corrected);
    const cplx df = (upper_component_spin(m, s, r + h, WaveMode::corrected) -
                     upper_component_spin(m, s, r - h, WaveMode::corrected)) / (2.0 * h);
    const cplx fd = (df - f / r) / k;
    const cplx g = lower_from_upper_spin(m, s, r, WaveMode::corrected);
    worst = std::max(worst, std::abs(g - fd));
    scale = std::max(scale, std::abs(g));
  }
  EXPECT_LE(worst, 1e-6 * scale);
}

TEST(Lower, AsymptoticForm) {
  const ModelConfig m = spin_set();
  const BoundState s = physical(m, 0);
  const double r = 12.0;
  const cplx f = upper_component_spin(m, s, r, WaveMode::corrected);
  const cplx expected = -(2.0 * s.lambda + 1.0 / r) * f / k_spin(m, s);
  const cplx g = lower_from_upper_spin(m, s, r, WaveMode::corrected);
  EXPECT_LE(std::abs(g - expected), 1e-8 * std::abs(expected));
}

TEST(Lower, SingularAndDegenerate) {
  const ModelConfig m = spin_set();
  const BoundState s = physical(m, 0);
  EXPECT_THROW(lower_from_upper_spin(m, s, 0.0, WaveMode::corrected), SingularPoint);
  BoundState zero = s;
  zero.energy = -5.0;
  EXPECT_THROW(partner_component(m, zero, 1.0, {1.0, 1.0}), DegenerateCoupling);
  EXPECT_THROW(sample_spinor(m, zero, full_line_grid(1.0, 101), WaveMode::corrected),
               DegenerateCoupling);
  EXPECT_THROW(lower_component_pseudospin(m, s, 1.0, WaveMode::corrected), InvalidArgument);
}

TEST(Sampling, OriginIsMarkedSingular) {
  const ModelConfig m = spin_set();
  const SpinorSet set = sample_spinor(m, physical(m, 0), full_line_grid(1.0), WaveMode::corrected);
  ASSERT_EQ(set.samples.size(), 2001u);
  const auto& mid = set.samples[1000];
  EXPECT_EQ(mid.r, 0.0);
  EXPECT_TRUE(mid.singular);
  EXPECT_TRUE(std::isnan(mid.g.real()));
  EXPECT_TRUE(std::isfinite(mid.f.real()));
}

TEST(Sampling, HalfLineGrid) {
  const Grid grid = half_line_grid(2.0, 500);
  EXPECT_NEAR(grid.r.front(), 1e-3 / 2.0, 1e-15);
  EXPECT_NEAR(grid.r.back(), 15.0, 1e-12);
  for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_GT(grid.r[i], grid.r[i - 1]);
}

TEST(Normalize, UnitNormAndScaling) {
  const ModelConfig m = spin_set();
  const SpinorSet raw = sample_spinor(m, physical(m, 0), full_line_grid(1.0), WaveMode::corrected);
  const SpinorSet unit = normalize(raw);
  EXPECT_NEAR(unit.norm, 1.0, 1e-12);
  EXPECT_EQ(unit.phase, cplx(1.0, 0.0));

  SpinorSet doubled = raw;
  for (auto& s : doubled.samples) {
    s.f *= 2.0;
    s.g *= 2.0;
  }
  EXPECT_NEAR(normalize(doubled).normalization / unit.normalization, 0.5, 1e-12);

  const SpinorSet twice = normalize(unit);
  double worst = 0.0;
  for (std::size_t i = 0; i < unit.samples.size(); ++i) {
    if (unit.samples[i].singular) continue;
    worst = std::max(worst, std::abs(twice.samples[i].f - unit.samples[i].f));
    worst = std::max(worst, std::abs(twice.samples[i].g - unit.samples[i].g));
  }
  EXPECT_LE(worst, 1e-14);
}

TEST(Normalize, TrapezoidConvergesAtSecondOrder) {
  const ModelConfig m = spin_set();
  const BoundState s = physical(m, 1);
  std::vector<double> norms;
  for (int points : {401, 801, 1601}) {
    const Grid grid = uniform_grid(0.5, 15.0, points, Geometry::HalfLine);
    norms.push_back(trapezoid_norm(sample_spinor(m, s, grid, WaveMode::corrected)));
  }
  const double ratio = (norms[0] - norms[1]) / (norms[1] - norms[2]);
  EXPECT_GT(ratio, 3.8);
  EXPECT_LT(ratio, 4.2);
}

TEST(Normalize, PaperLiteralFullLineIsRejected) {
  const ModelConfig m = spin_set();
  const SpinorSet set =
      sample_spinor(m, physical(m, 0), full_line_grid(1.0), WaveMode::paper_literal);
  EXPECT_THROW(normalize(set), NonNormalizable);
  EXPECT_FALSE(std::isfinite(ode_residual(set).ode));
}

TEST(Normalize, ZeroSamplesRejected) {
  const ModelConfig m = spin_set();
  SpinorSet set = sample_spinor(m, physical(m, 0), full_line_grid(1.0, 101), WaveMode::corrected);
  for (auto& s : set.samples) s.f = s.g = 0.0;
  EXPECT_THROW(normalize(set), NonNormalizable);
}

TEST(Residual, CorrectedModeSolvesBothEquations) {
  const ModelConfig m = spin_set();
  for (int n = 0; n < 4; ++n) {
    const BoundState s = physical(m, n);
    for (const Grid& grid : {full_line_grid(1.0), half_line_grid(1.0)}) {
      const auto report = ode_residual(sample_spinor(m, s, grid, WaveMode::corrected));
      EXPECT_LE(report.ode, 1e-5) << "n=" << n;
      EXPECT_LE(report.coupled, 1e-4) << "n=" << n;
    }
  }
}

TEST(Residual, PaperLiteralHalfLineFails) {
  const ModelConfig m = spin_set();
  const auto report =
      ode_residual(sample_spinor(m, physical(m, 1), half_line_grid(1.0), WaveMode::paper_literal));
  EXPECT_GT(report.ode, 1e-3);
}

TEST(Residual, WrongEnergyIsDetected) {
  const ModelConfig m = spin_set();
  const BoundState wrong = make_bound_state(m, 0, physical(m, 0).energy + 0.3);
  EXPECT_GT(ode_residual(sample_spinor(m, wrong, full_line_grid(1.0), WaveMode::corrected)).ode, 1e-3);
}

TEST(Residual, NeedsFiftySamples) {
  const ModelConfig m = spin_set();
  const SpinorSet set = sample_spinor(m, physical(m, 0), full_line_grid(1.0, 49), WaveMode::corrected);
  EXPECT_THROW(ode_residual(set), InvalidArgument);
}

TEST(Pseudospin, DualStateReproducesSpinSpinor) {
  const ModelConfig spin = spin_set();
  const ModelConfig dual = duality_map(spin);
  for (int n = 0; n < 3; ++n) {
    const BoundState a = physical(spin, n);
    const BoundState b = make_bound_state(dual, n, -a.energy);
    const Grid grid = full_line_grid(1.0);
    const SpinorSet sa = normalize(sample_spinor(spin, a, grid, WaveMode::corrected));
    const SpinorSet sb = normalize(sample_spinor(dual, b, grid, WaveMode::corrected));
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (sa.samples[i].singular) continue;
      worst = std::max(worst, std::abs(sa.samples[i].f - sb.samples[i].g));
      worst = std::max(worst, std::abs(sa.samples[i].g - sb.samples[i].f));
    }
    EXPECT_LE(worst, 1e-8) << "n=" << n;
    EXPECT_LE(ode_residual(sb).ode, 1e-5);
    EXPECT_EQ(upper_from_lower_pseudospin(dual, b, 2.0, WaveMode::corrected),
              partner_component(dual, b, 2.0, schrodinger_component(dual, b, 2.0, WaveMode::corrected)));
  }
}

TEST(Pt, ComplexStateSolvesTheEquation) {
  ModelConfig m = spin_set();
  m.params = PotentialParams::pt_symmetric(2.0, 3.0, 1.0);
  const auto states = solve_energy_complex(m, 2, default_pt_seeds(m));
  ASSERT_FALSE(states.empty());
  int checked = 0;
  for (const auto& s : states) {
    if (std::abs(s.energy.imag()) < 1e-8) continue;
    const auto report = ode_residual(sample_spinor(m, s, half_line_grid(1.0), WaveMode::corrected));
    EXPECT_LE(report.ode, 1e-5);
    ++checked;
  }
  EXPECT_EQ(checked, 2);
}

TEST(Mode, Names) {
  EXPECT_EQ(to_string(WaveMode::corrected), "corrected");
  EXPECT_EQ(wave_mode_from_string("paper_literal"), WaveMode::paper_literal);
  EXPECT_FALSE(wave_mode_from_string("other").has_value());
}
