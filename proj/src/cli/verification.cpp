#include "cli/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include <fmt/format.h>

#include "dirac_rm/errors.hpp"
#include "dirac_rm/hyp2f1.hpp"
#include "dirac_rm/wavefunctions.hpp"

namespace dirac_rm::cli {

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kControlFloor = 1e-3;

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = lo + i * step;
  out.back() = hi;
  return out;
}

std::vector<double> energies_of(const std::vector<BoundState>& states) {
  std::vector<double> out;
  for (const auto& s : states) out.push_back(s.energy.real());
  return out;
}

std::vector<double> solve_or_empty(const ModelConfig& cfg, int n) {
  try {
    return energies_of(solve_energy(cfg, n));
  } catch (const DegenerateShift&) {
    return {};
  }
}

// |f_a(E) - f_b(E)| over the window; both sides must fail together.
double residual_gap(const ModelConfig& a, const ModelConfig& b, int n, bool& mismatch) {
  const auto [lo, hi] = a.window();
  double worst = 0.0;
  for (double e : linspace(lo, hi, 101)) {
    bool fa = false;
    bool fb = false;
    cplx ra;
    cplx rb;
    try {
      ra = energy_residual(a, n, e);
    } catch (const Error&) {
      fa = true;
    }
    try {
      rb = energy_residual(b, n, e);
    } catch (const Error&) {
      fb = true;
    }
    if (fa != fb) mismatch = true;
    if (!fa && !fb) worst = std::max(worst, std::abs(ra - rb) / (1.0 + std::abs(ra)));
  }
  return worst;
}

double energy_gap(const std::vector<double>& a, const std::vector<double>& b, bool& mismatch) {
  if (a.size() != b.size()) {
    mismatch = true;
    return 0.0;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

CheckResult riccati(const VerifyOptions& opts) {
  CheckResult out{"riccati", false, 0.0, kIdentityTol, ""};
  double literal = 0.0;
  double control = std::numeric_limits<double>::infinity();
  for (const auto& s : random_susy_samples(opts.seed, 10)) {
    const auto grid = linspace(-8.0 / s.alpha, 8.0 / s.alpha, 1601);
    const double e0 = ground_energy(s.sp);
    Superpotential sp = s.sp;
    if (opts.inject_fault) sp.q1 += 0.1;
    out.max_residual = std::max(
        out.max_residual, riccati_residual(sp, s.v1_eff, s.v2_eff, e0, grid).relative());
    literal = std::max(literal, riccati_residual(s.sp, s.v1_eff, s.v2_eff, e0, grid,
                                                 GroundStateMode::paper_literal)
                                    .relative());
    Superpotential perturbed = s.sp;
    perturbed.q1 += 0.1;
    control = std::min(control,
                       riccati_residual(perturbed, s.v1_eff, s.v2_eff, e0, grid).relative());
  }
  out.passed = out.max_residual <= out.tolerance && control > kControlFloor;
  out.detail = fmt::format(
      "orientation=normalizable; paper_literal orientation={:.3e}; perturbed-Q1 control={:.3e}",
      literal, control);
  return out;
}

CheckResult shape_invariance(const VerifyOptions& opts) {
  CheckResult out{"shape-invariance", false, 0.0, kIdentityTol, ""};
  double control = std::numeric_limits<double>::infinity();
  for (const auto& s : random_susy_samples(opts.seed, 10)) {
    const auto grid = linspace(-8.0 / s.alpha, 8.0 / s.alpha, 1601);
    out.max_residual =
        std::max(out.max_residual, shape_invariance_residual(s.sp, grid).relative());
    control = std::min(control, shape_invariance_residual(s.sp, grid, s.alpha).relative());
  }
  out.passed = out.max_residual <= out.tolerance && control > kControlFloor;
  out.detail = fmt::format("a1 = a0 - 2 alpha; a1 = a0 - alpha control={:.3e}", control);
  return out;
}

CheckResult telescoping(const VerifyOptions& opts) {
  CheckResult out{"telescoping", false, 0.0, 1e-12, ""};
  for (const auto& s : random_susy_samples(opts.seed, 10)) {
    for (int n = 1; n <= 10; ++n) {
      const ShiftChain chain = make_shift_chain(s.sp.q2, s.alpha, n, s.v2_eff);
      const ShiftedEnergy e = shifted_energy(chain, n, s.v2_eff);
      const double scale = std::max({std::abs(e.summed), std::abs(e.telescoped), 1e-300});
      out.max_residual = std::max(out.max_residual, std::abs(e.summed - e.telescoped) / scale);
    }
  }
  out.passed = out.max_residual <= out.tolerance;
  out.detail = "explicit sum vs closed form, n = 1..10, relative";
  return out;
}

CheckResult eckart_reduction(const VerifyOptions& opts) {
  CheckResult out{"eckart-reduction", false, 0.0, 1e-12, ""};
  ModelConfig base = opts.model.params.is_complex() ? default_model() : opts.model;
  const double v1 = base.params.v1;
  const double v2 = base.params.v2;
  const double alpha = base.params.alpha;
  bool mismatch = false;
  int roots = 0;
  for (SymmetryLimit limit : {SymmetryLimit::Spin, SymmetryLimit::Pseudospin}) {
    // Pseudospin wells need the opposite sign of V1.
    const double sign = limit == SymmetryLimit::Spin ? 1.0 : -1.0;
    ModelConfig rm = base;
    rm.symmetry.limit = limit;
    rm.search_window.reset();
    rm.params = PotentialParams::rosen_morse(sign * v1, sign * v2, alpha);
    ModelConfig ek = rm;
    ek.params = PotentialParams::eckart(-sign * v1, -sign * v2, alpha);
    for (int n = 0; n <= 3; ++n) {
      out.max_residual = std::max(out.max_residual, residual_gap(ek, rm, n, mismatch));
      const auto a = solve_or_empty(ek, n);
      const auto b = solve_or_empty(rm, n);
      roots += static_cast<int>(a.size());
      out.max_residual = std::max(out.max_residual, energy_gap(a, b, mismatch));
    }
  }
  out.passed = !mismatch && out.max_residual <= out.tolerance;
  out.detail = fmt::format("spin and pseudospin, n = 0..3, {} roots compared{}", roots,
                           mismatch ? "; root sets differ" : "");
  return out;
}

CheckResult reflectionless_reduction(const VerifyOptions& opts) {
  CheckResult out{"reflectionless-reduction", false, 0.0, 1e-12, ""};
  const ModelConfig base = opts.model.params.is_complex() ? default_model() : opts.model;
  bool mismatch = false;
  int roots = 0;
  for (int gamma = 1; gamma <= 3; ++gamma) {
    for (SymmetryLimit limit : {SymmetryLimit::Spin, SymmetryLimit::Pseudospin}) {
      ModelConfig rl = base;
      rl.symmetry.limit = limit;
      rl.search_window.reset();
      rl.params = PotentialParams::reflectionless(gamma, base.params.alpha);
      ModelConfig rm = rl;
      rm.params = PotentialParams::rosen_morse(gamma * (gamma + 1) / 2.0, 0.0, base.params.alpha);
      for (int n = 0; n <= gamma; ++n) {
        out.max_residual = std::max(out.max_residual, residual_gap(rl, rm, n, mismatch));
        const auto a = solve_or_empty(rl, n);
        const auto b = solve_or_empty(rm, n);
        roots += static_cast<int>(a.size());
        out.max_residual = std::max(out.max_residual, energy_gap(a, b, mismatch));
      }
    }
  }
  out.passed = !mismatch && out.max_residual <= out.tolerance;
  out.detail = fmt::format("gamma = 1..3, both limits, {} roots compared{}", roots,
                           mismatch ? "; root sets differ" : "");
  return out;
}

CheckResult duality(const VerifyOptions& opts) {
  CheckResult out{"duality", false, 0.0, 1e-10, ""};
  std::vector<ModelConfig> sets;
  sets.push_back(opts.model.params.is_complex() ? default_model() : opts.model);
  {
    ModelConfig m = default_model();
    m.mass = 2.0;
    m.symmetry.c = 0.3;
    m.params = PotentialParams::rosen_morse(3.0, -0.5, 1.2);
    sets.push_back(m);
  }
  {
    ModelConfig m = default_model();
    m.mass = 4.0;
    m.symmetry.c = -0.5;
    m.params = PotentialParams::rosen_morse(6.0, 2.0, 0.8);
    sets.push_back(m);
  }
  bool mismatch = false;
  int roots = 0;
  for (const ModelConfig& cfg : sets) {
    const ModelConfig dual = duality_map(cfg);
    for (int n = 0; n <= 2; ++n) {
      const auto a = solve_or_empty(cfg, n);
      auto b = solve_or_empty(dual, n);
      for (double& e : b) e = -e;
      std::sort(b.begin(), b.end());
      roots += static_cast<int>(a.size());
      out.max_residual = std::max(out.max_residual, energy_gap(a, b, mismatch));
    }
  }
  out.passed = !mismatch && out.max_residual <= out.tolerance;
  out.detail = fmt::format("{} parameter sets, n = 0..2, {} roots mirrored{}", sets.size(),
                           roots, mismatch ? "; root sets differ" : "");
  return out;
}

CheckResult hyp2f1_identities(const VerifyOptions& opts) {
  CheckResult out{"hyp2f1-identities", false, 0.0, 1e-12, ""};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  const double ln2 = std::abs(hyp2f1({1.0, 1.0, 2.0, -1.0}) - std::log(2.0));
  const double kummer = std::abs(hyp2f1({1.0, 0.5, 1.5, -1.0}) - std::atan(1.0));

  double symmetry = 0.0;
  double pfaff = 0.0;
  for (int i = 0; i < 50; ++i) {
    const cplx a{uniform(-3, 3), uniform(-1, 1)};
    const cplx b{uniform(-3, 3), uniform(-1, 1)};
    const cplx c{uniform(0.5, 4), uniform(-1, 1)};
    const double x = uniform(-1.0, 0.0);
    const cplx ab = hyp2f1({a, b, c, x});
    const cplx ba = hyp2f1({b, a, c, x});
    symmetry = std::max(symmetry, std::abs(ab - ba) / std::max(1.0, std::abs(ab)));
    const double xp = uniform(-0.5, -0.3);
    const cplx direct = detail::hyp2f1_series(a, b, c, xp).value;
    const cplx transformed = detail::hyp2f1_pfaff(a, b, c, xp).value;
    pfaff = std::max(pfaff, std::abs(direct - transformed) / std::max(1.0, std::abs(direct)));
  }

  double derivative = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx a{uniform(-10, 10), 0.0};
    const cplx b{uniform(-10, 10), 0.0};
    const cplx c{uniform(1.0, 10.0), 0.0};
    const double x = uniform(-0.9, -0.1);
    const double h = 1e-3;
    auto f = [&](double t) { return hyp2f1({a, b, c, t}); };
    const cplx fd = (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
    const cplx d = hyp2f1_derivative({a, b, c, x});
    derivative = std::max(derivative, std::abs(d - fd) / std::max(std::abs(d), std::abs(f(x))));
  }
  out.max_residual = std::max({ln2, kummer, symmetry, pfaff});
  out.passed = out.max_residual <= out.tolerance && derivative <= 1e-7;
  out.detail = fmt::format(
      "ln2={:.3e} kummer={:.3e} symmetry={:.3e} pfaff={:.3e} derivative(100 samples, tol "
      "1e-7)={:.3e}",
      ln2, kummer, symmetry, pfaff, derivative);
  return out;
}

double closest(const std::vector<double>& xs, double target) {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (double x : xs) {
    if (std::isnan(best) || std::abs(x - target) < std::abs(best - target)) best = x;
  }
  return best;
}

std::vector<double> physical_energies(const ModelConfig& cfg, int n) {
  std::vector<double> out;
  try {
    for (const auto& s : solve_energy(cfg, n)) {
      if (s.flags.all()) out.push_back(s.energy.real());
    }
  } catch (const DegenerateShift&) {
  }
  return out;
}

CheckResult oracle_agreement(const VerifyOptions& opts) {
  CheckResult out{"oracle-agreement", false, 0.0, 5e-4, ""};
  const ModelConfig cfg = opts.model.params.is_complex() ? default_model() : opts.model;
  const double alpha = cfg.params.alpha;
  const OracleConfig ocfg = OracleConfig::full_line(opts.oracle_extent / alpha, opts.oracle_points);

  bool ok = true;
  std::string nodes;
  int compared = 0;
  for (const ModelConfig& m : {cfg, duality_map(cfg)}) {
    for (int n = 0; n <= 2; ++n) {
      const auto analytic = physical_energies(m, n);
      if (analytic.empty()) continue;
      const auto crossings = self_consistent_energies(m, ocfg, n);
      for (double e : analytic) {
        const double o = closest(crossings, e);
        const double delta = std::isnan(o) ? std::numeric_limits<double>::infinity()
                                           : std::abs(o - e);
        out.max_residual = std::max(out.max_residual, delta);
        ++compared;
        if (!std::isnan(o)) {
          const auto op = discretize(effective_coefficients(m, o), alpha, ocfg);
          const int k = node_count(op, eigenvalue(op, n));
          nodes += fmt::format("{}{}", nodes.empty() ? "" : ",", k);
          if (k != n) ok = false;
        }
      }
    }
  }
  if (compared == 0) ok = false;

  // Second-order convergence: N + 1 doubles, so h halves exactly.
  double ratio = std::numeric_limits<double>::quiet_NaN();
  const auto ground = physical_energies(cfg, 0);
  if (!ground.empty()) {
    double e[3];
    int i = 0;
    for (int points : {999, 1999, 3999}) {
      OracleConfig c = OracleConfig::full_line(opts.oracle_extent / alpha, points);
      e[i++] = closest(self_consistent_energies(cfg, c, 0), ground.front());
    }
    ratio = std::abs(e[0] - e[1]) / std::abs(e[1] - e[2]);
  }
  if (!(ratio >= 3.5 && ratio <= 4.5)) ok = false;

  out.passed = ok && out.max_residual <= out.tolerance;
  out.detail = fmt::format(
      "full line L={}/alpha N={}; {} energies (both limits); node counts [{}]; convergence "
      "ratio={:.4f}",
      opts.oracle_extent, opts.oracle_points, compared, nodes, ratio);
  return out;
}

CheckResult ode_residual_check(const VerifyOptions& opts) {
  CheckResult out{"ode-residual", false, 0.0, 1e-5, ""};
  const ModelConfig cfg = opts.model.params.is_complex() ? default_model() : opts.model;
  const double alpha = cfg.params.alpha;
  const Grid grid = full_line_grid(alpha, opts.wave_points);
  std::vector<double> probe = linspace(0.1 / alpha, 15.0 / alpha, 300);

  bool ok = true;
  int states = 0;
  std::string modes;
  double derivative = 0.0;
  for (int n = 0; n < 10; ++n) {
    std::vector<BoundState> found;
    try {
      found = solve_energy(cfg, n);
    } catch (const DegenerateShift&) {
      break;
    }
    if (found.empty()) break;
    for (const BoundState& s : found) {
      if (!s.flags.all()) continue;
      ++states;
      std::string passing;
      double best = std::numeric_limits<double>::infinity();
      for (WaveMode mode : {WaveMode::paper_literal, WaveMode::corrected}) {
        const SpinorSet set = sample_spinor(cfg, s, grid, mode);
        const double r = ode_residual(set).ode;
        best = std::min(best, r);
        if (r <= out.tolerance) {
          passing += fmt::format("{}{}", passing.empty() ? "" : "+", to_string(mode));
        }
        // Closed-form partner component against a central difference of
        // the Schrodinger-like component.
        double worst = 0.0;
        double scale = 0.0;
        for (double x : probe) {
          const ComponentValue c = schrodinger_component(cfg, s, x, mode);
          const double h = 1e-6;
          const cplx fd = (schrodinger_component(cfg, s, x + h, mode).value -
                           schrodinger_component(cfg, s, x - h, mode).value) /
                          (2.0 * h);
          const cplx closed = partner_component(cfg, s, x, c);
          const cplx numeric = partner_component(cfg, s, x, {c.value, fd});
          worst = std::max(worst, std::abs(closed - numeric));
          scale = std::max(scale, std::abs(closed));
        }
        if (scale > 0.0 && std::isfinite(worst)) derivative = std::max(derivative, worst / scale);
      }
      out.max_residual = std::max(out.max_residual, best);
      if (passing.empty()) {
        ok = false;
        passing = "none";
      }
      modes += fmt::format("{}n={}:{}", modes.empty() ? "" : " ", n, passing);
    }
  }
  if (states == 0) ok = false;
  if (!(derivative <= 1e-6)) ok = false;
  out.passed = ok && out.max_residual <= out.tolerance;
  out.detail = fmt::format("passing mode per state [{}]; partner component vs finite "
                           "difference={:.3e} (tol 1e-6)",
                           modes, derivative);
  return out;
}

using CheckFn = std::function<CheckResult(const VerifyOptions&)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> table = {
      {"riccati", riccati},
      {"shape-invariance", shape_invariance},
      {"telescoping", telescoping},
      {"eckart-reduction", eckart_reduction},
      {"reflectionless-reduction", reflectionless_reduction},
      {"duality", duality},
      {"hyp2f1-identities", hyp2f1_identities},
      {"oracle-agreement", oracle_agreement},
      {"ode-residual", ode_residual_check},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "riccati",     "shape-invariance",  "telescoping",      "eckart-reduction",
      "reflectionless-reduction", "duality", "hyp2f1-identities", "oracle-agreement",
      "ode-residual"};
  return names;
}

bool is_suite(const std::string& name) { return registry().count(name) > 0; }

CheckResult run_check(const std::string& name, const VerifyOptions& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidArgument("unknown verification suite: " + name);
  try {
    return it->second(opts);
  } catch (const Error& e) {
    return {name, false, std::numeric_limits<double>::infinity(), 0.0,
            fmt::format("{}: {}", e.kind(), e.what())};
  }
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          const std::vector<std::string>& suites) {
  std::vector<CheckResult> out;
  for (const auto& name : suite_names()) {
    if (suites.empty() || std::find(suites.begin(), suites.end(), name) != suites.end()) {
      out.push_back(run_check(name, opts));
    }
  }
  return out;
}

std::vector<SusySample> random_susy_samples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SusySample> out;
  while (static_cast<int>(out.size()) < count) {
    const double alpha = 0.5 + 1.5 * unit(rng);
    const double beta = 0.5 + 4.0 * unit(rng);
    const double bound = 2.0 * alpha * alpha * beta * beta;  // Q1 > 0 iff V2eff < bound
    const double v2_eff = -bound + 1.9 * bound * unit(rng);
    SusySample s{alpha, beta, -alpha * alpha * beta * (beta + 1.0), v2_eff,
                 make_superpotential(alpha, beta, v2_eff)};
    if (s.sp.valid()) out.push_back(s);
  }
  return out;
}

ModelConfig default_model() {
  ModelConfig m;
  m.mass = 5.0;
  m.symmetry = Symmetry::spin(0.0);
  m.params = PotentialParams::rosen_morse(4.0, 1.0, 1.0);
  return m;
}

ModelConfig eckart_default() {
  ModelConfig m = default_model();
  m.params = PotentialParams::eckart(-4.0, -1.0, 1.0);
  return m;
}

ModelConfig pt_default() {
  ModelConfig m = default_model();
  m.params = PotentialParams::pt_symmetric(2.0, 3.0, 1.0);
  return m;
}

ModelConfig reflectionless_default() {
  ModelConfig m;
  m.mass = 1.0;
  m.symmetry = Symmetry::spin(0.0);
  m.params = PotentialParams::reflectionless(1, 1.0);
  return m;
}

}  // namespace dirac_rm::cli
