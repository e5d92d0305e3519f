#include "dirac_rm/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dirac_rm/errors.hpp"
#include "dirac_rm/hyp2f1.hpp"

namespace dirac_rm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDecayRatio = 1e-3;

struct Form {
  cplx lambda;
  cplx power;  // exponent of (1 + y)
  cplx a;
  cplx b;
  cplx c;
};

Form form_of(const ModelConfig& cfg, const BoundState& state, WaveMode mode) {
  const cplx lambda = lambda_param(cfg, state, mode);
  const double n = state.n;
  if (mode == WaveMode::corrected) {
    return {lambda, -state.beta, -n, 2.0 * lambda - 2.0 * state.beta + n, 2.0 * lambda + 1.0};
  }
  return {lambda, state.beta, 2.0 * state.beta + n, 2.0 * lambda - n, 2.0 * lambda + 1.0};
}

cplx coupling(const ModelConfig& cfg, cplx e) {
  if (cfg.symmetry.limit == SymmetryLimit::Spin) return cfg.mass + e - cfg.symmetry.c;
  return cfg.mass - e + cfg.symmetry.c;
}

ComponentValue evaluate_form(const Form& form, double alpha, double r) {
  const double y = std::exp(-2.0 * alpha * r);
  const double x = -y;
  const cplx h = hyp2f1({form.a, form.b, form.c, x});
  const cplx dh = hyp2f1_derivative({form.a, form.b, form.c, x});
  const cplx pref = std::exp(-2.0 * alpha * form.lambda * r + form.power * std::log1p(y));
  const double share = y / (1.0 + y);
  const cplx slope = -2.0 * alpha * form.lambda - 2.0 * alpha * form.power * share;
  return {pref * h, pref * (slope * h + 2.0 * alpha * y * dh)};
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx& primary(SpinorSample& s, SymmetryLimit limit) {
  return limit == SymmetryLimit::Spin ? s.f : s.g;
}
cplx primary(const SpinorSample& s, SymmetryLimit limit) {
  return limit == SymmetryLimit::Spin ? s.f : s.g;
}
cplx secondary(const SpinorSample& s, SymmetryLimit limit) {
  return limit == SymmetryLimit::Spin ? s.g : s.f;
}

SpinorSample sample_at(const ModelConfig& cfg, const BoundState& state, const Form& form,
                       cplx phase, double r) {
  SpinorSample s;
  s.r = r;
  cplx& p = primary(s, cfg.symmetry.limit);
  cplx& q = cfg.symmetry.limit == SymmetryLimit::Spin ? s.g : s.f;
  try {
    ComponentValue c = evaluate_form(form, cfg.params.alpha, r);
    c.value *= phase;
    c.derivative *= phase;
    p = c.value;
    if (r == 0.0) {
      s.singular = true;
      q = {kNaN, kNaN};
    } else {
      q = partner_component(cfg, state, r, c);
    }
  } catch (const Error&) {
    p = {kNaN, kNaN};
    q = {kNaN, kNaN};
  }
  return s;
}

// 5-point stencils on a uniform grid.
cplx second_derivative(const std::vector<cplx>& v, std::size_t i, double h) {
  return (-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] + 16.0 * v[i + 1] - v[i + 2]) / (12.0 * h * h);
}
cplx first_derivative(const std::vector<cplx>& v, std::size_t i, double h) {
  return (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
}

}  // namespace

std::string_view to_string(WaveMode m) {
  return m == WaveMode::corrected ? "corrected" : "paper_literal";
}

std::optional<WaveMode> wave_mode_from_string(std::string_view name) {
  if (name == "corrected") return WaveMode::corrected;
  if (name == "paper_literal" || name == "paper-literal" || name == "literal") {
    return WaveMode::paper_literal;
  }
  return std::nullopt;
}

cplx lambda_param(const ModelConfig& cfg, const BoundState& state, WaveMode mode) {
  const cplx shift = state.beta - static_cast<double>(state.n);
  if (shift == cplx{0.0, 0.0}) throw DegenerateShift("beta - n = 0 in lambda");
  const double alpha = cfg.params.alpha;
  const cplx v2_eff = effective_coefficients(cfg, state.energy).v2_eff;
  const cplx tilt = v2_eff / (2.0 * alpha * alpha * shift);
  if (mode == WaveMode::corrected) return 0.5 * (shift + tilt);
  // n + beta in front; the PT coupling enters with -i.
  const double sign = cfg.params.is_complex() ? -1.0 : 1.0;
  return 0.5 * (static_cast<double>(state.n) + state.beta + sign * tilt);
}

ComponentValue schrodinger_component(const ModelConfig& cfg, const BoundState& state, double r,
                                     WaveMode mode) {
  const Form form = form_of(cfg, state, mode);
  const cplx phase = std::exp(cplx{0.0, std::numbers::pi} * form.lambda);
  ComponentValue c = evaluate_form(form, cfg.params.alpha, r);
  c.value *= phase;
  c.derivative *= phase;
  return c;
}

cplx partner_component(const ModelConfig& cfg, const BoundState& state, double r,
                       const ComponentValue& c) {
  if (r == 0.0) throw SingularPoint("1/r coupling term at r = 0");
  const cplx k = coupling(cfg, state.energy);
  if (k == cplx{0.0, 0.0}) throw DegenerateCoupling("coupling mass term vanishes");
  return (c.derivative - c.value / r) / k;
}

cplx upper_component_spin(const ModelConfig& cfg, const BoundState& state, double r,
                          WaveMode mode) {
  if (cfg.symmetry.limit != SymmetryLimit::Spin) throw InvalidArgument("spin branch expected");
  return schrodinger_component(cfg, state, r, mode).value;
}

cplx lower_from_upper_spin(const ModelConfig& cfg, const BoundState& state, double r,
                           WaveMode mode) {
  if (cfg.symmetry.limit != SymmetryLimit::Spin) throw InvalidArgument("spin branch expected");
  if (r == 0.0) throw SingularPoint("1/r coupling term at r = 0");
  return partner_component(cfg, state, r, schrodinger_component(cfg, state, r, mode));
}

cplx lower_component_pseudospin(const ModelConfig& cfg, const BoundState& state, double r,
                                WaveMode mode) {
  if (cfg.symmetry.limit != SymmetryLimit::Pseudospin) {
    throw InvalidArgument("pseudospin branch expected");
  }
  return schrodinger_component(cfg, state, r, mode).value;
}

cplx upper_from_lower_pseudospin(const ModelConfig& cfg, const BoundState& state, double r,
                                 WaveMode mode) {
  if (cfg.symmetry.limit != SymmetryLimit::Pseudospin) {
    throw InvalidArgument("pseudospin branch expected");
  }
  if (r == 0.0) throw SingularPoint("1/r coupling term at r = 0");
  return partner_component(cfg, state, r, schrodinger_component(cfg, state, r, mode));
}

SpinorSet sample_spinor(const ModelConfig& cfg, const BoundState& state, const Grid& grid,
                        WaveMode mode, Exec exec) {
  if (coupling(cfg, state.energy) == cplx{0.0, 0.0}) {
    throw DegenerateCoupling("coupling mass term vanishes");
  }
  const Form form = form_of(cfg, state, mode);
  const cplx phase = std::exp(cplx{0.0, std::numbers::pi} * form.lambda);

  SpinorSet set;
  set.state = state;
  set.model = cfg;
  set.mode = mode;
  set.geometry = grid.geometry;
  set.spacing = grid.spacing;
  set.phase = phase;
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
  set.samples.resize(grid.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      set.samples[static_cast<std::size_t>(i)] =
          sample_at(cfg, state, form, phase, grid.r[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      set.samples[static_cast<std::size_t>(i)] =
          sample_at(cfg, state, form, phase, grid.r[static_cast<std::size_t>(i)]);
    }
  }
  set.norm = trapezoid_norm(set);
  return set;
}

double trapezoid_norm(const SpinorSet& set) {
  auto density = [](const SpinorSample& s) { return std::norm(s.f) + std::norm(s.g); };
  auto usable = [](const SpinorSample& s) { return !s.singular && finite(s.f) && finite(s.g); };
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < set.samples.size(); ++i) {
    const SpinorSample& a = set.samples[i];
    const SpinorSample& b = set.samples[i + 1];
    if (!usable(a) || !usable(b)) continue;
    sum += 0.5 * (b.r - a.r) * (density(a) + density(b));
  }
  return sum;
}

SpinorSet normalize(const SpinorSet& set) {
  const SymmetryLimit limit = set.model.symmetry.limit;
  double peak = 0.0;
  for (const SpinorSample& s : set.samples) {
    if (s.singular) {
      if (!finite(primary(s, limit))) throw NonNormalizable("non-finite sample");
      continue;
    }
    if (!finite(s.f) || !finite(s.g)) throw NonNormalizable("non-finite sample");
    peak = std::max(peak, std::abs(primary(s, limit)));
  }
  if (set.samples.empty() || !(peak > 0.0)) throw NonNormalizable("vanishing wavefunction");
  auto decayed = [&](const SpinorSample& s) { return std::abs(primary(s, limit)) <= kDecayRatio * peak; };
  if (!decayed(set.samples.back()) ||
      (set.geometry == Geometry::FullLine && !decayed(set.samples.front()))) {
    throw NonNormalizable("wavefunction does not decay at an open end of the grid");
  }
  const double norm = trapezoid_norm(set);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw NonNormalizable("norm underflow or overflow");

  SpinorSet out = set;
  const double scale = 1.0 / std::sqrt(norm);
  const cplx factor = scale / set.phase;
  for (SpinorSample& s : out.samples) {
    s.f *= factor;
    s.g *= factor;
  }
  out.normalization = set.normalization * scale;
  out.phase = {1.0, 0.0};
  out.norm = trapezoid_norm(out);
  return out;
}

ResidualReport ode_residual(const SpinorSet& set, const EffectiveCoefficients& eff) {
  const std::size_t n = set.samples.size();
  if (n < 50) throw InvalidArgument("ode_residual needs at least 50 samples");
  const SymmetryLimit limit = set.model.symmetry.limit;
  const double alpha = set.model.params.alpha;
  const double h = set.spacing;

  std::vector<cplx> p(n);
  std::vector<cplx> q(n);
  bool all_finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = primary(set.samples[i], limit);
    q[i] = secondary(set.samples[i], limit);
    if (!finite(p[i])) all_finite = false;
  }
  ResidualReport report;
  if (!all_finite) return {kInf, kInf};

  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double r = set.samples[i].r;
    const double c = std::cosh(alpha * r);
    const cplx v = eff.v1_eff / (c * c) + eff.v2_eff * std::tanh(alpha * r);
    const cplx lhs = -second_derivative(p, i, h) + (v - eff.e_eff) * p[i];
    worst = std::max(worst, std::abs(lhs));
    scale = std::max(scale, std::abs(eff.e_eff * p[i]));
  }
  report.ode = scale > 0.0 ? worst / scale : kInf;

  // Spin: G' + G/r = (M - E + Sigma) F. Pseudospin: F' + F/r = (M + E - Delta) G.
  // The left side is (r Q)'/r; r Q is smooth through the 1/r spike of Q.
  std::vector<cplx> rq(n);
  for (std::size_t i = 0; i < n; ++i) rq[i] = set.samples[i].r * q[i];
  const double m = set.model.mass;
  const cplx e = set.state.energy;
  const double cutoff = 0.05 / alpha;
  double coupled = 0.0;
  double coupled_scale = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    bool skip = false;
    for (std::size_t j = i - 2; j <= i + 2; ++j) {
      if (std::abs(set.samples[j].r) < cutoff || !finite(q[j])) skip = true;
    }
    if (skip) continue;
    const double r = set.samples[i].r;
    const cplx v = evaluate(set.model.params, r);
    const cplx mass_term = limit == SymmetryLimit::Spin ? m - e + v : m + e - v;
    const cplx rhs = mass_term * p[i];
    const cplx lhs = first_derivative(rq, i, h) / r;
    coupled = std::max(coupled, std::abs(lhs - rhs));
    coupled_scale = std::max(coupled_scale, std::abs(rhs));
  }
  report.coupled = coupled_scale > 0.0 ? coupled / coupled_scale : kInf;
  return report;
}

ResidualReport ode_residual(const SpinorSet& set) {
  return ode_residual(set, effective_coefficients(set.model, set.state.energy));
}

}  // namespace dirac_rm
