#include "dirac_rm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirac_rm/errors.hpp"

namespace dirac_rm {

namespace {

constexpr double kWindowInset = 1e-6;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum class PointStatus : char { ok, outside_domain, non_finite };

struct ScanPoint {
  double value = kNaN;
  PointStatus status = PointStatus::outside_domain;
};

ScanPoint scan_point(const ModelConfig& cfg, int n, double e) {
  try {
    const cplx beta = beta_of(cfg, e);
    if (!(beta.real() - n > 0.0)) return {};
    const double f = energy_residual(cfg, n, e).real();
    if (!std::isfinite(f)) return {kNaN, PointStatus::non_finite};
    return {f, PointStatus::ok};
  } catch (const BranchError&) {
    return {};
  } catch (const DegenerateShift&) {
    return {};
  }
}

std::vector<ScanPoint> scan(const ModelConfig& cfg, int n, int points, Exec exec) {
  const auto [lo, hi] = cfg.window();
  const double step = (hi - lo) / (points - 1);
  std::vector<ScanPoint> out(static_cast<std::size_t>(points));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < points; ++i) {
      out[static_cast<std::size_t>(i)] = scan_point(cfg, n, i == points - 1 ? hi : lo + i * step);
    }
  } else {
    for (int i = 0; i < points; ++i) {
      out[static_cast<std::size_t>(i)] = scan_point(cfg, n, i == points - 1 ? hi : lo + i * step);
    }
  }
  return out;
}

// Brent's bracketed root finder (bisection / secant / inverse quadratic).
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < 300; ++iter) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + 1e-300;
    const double half = 0.5 * (c - b);
    if (std::abs(half) <= tol || fb == 0.0) return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * half * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * half * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = half;
        e = d;
      }
    } else {
      d = half;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (half > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

}  // namespace

std::pair<double, double> ModelConfig::window() const {
  if (search_window) return *search_window;
  double first;
  double second;
  if (symmetry.limit == SymmetryLimit::Spin) {
    first = symmetry.c - mass;
    second = mass;
  } else {
    first = -mass;
    second = mass + symmetry.c;
  }
  return {std::min(first, second) + kWindowInset, std::max(first, second) - kWindowInset};
}

void ModelConfig::validate() const {
  params.validate();
  if (!(mass > 0.0) || !std::isfinite(mass)) throw InvalidArgument("mass must be positive");
  const auto [lo, hi] = window();
  if (!(lo < hi)) throw InvalidArgument("search window must satisfy E_lo < E_hi");
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (scan_points < 3 || max_scan_points < scan_points) {
    throw InvalidArgument("scan_points must be >= 3 and <= max_scan_points");
  }
}

EffectiveCoefficients effective_coefficients(const ModelConfig& cfg, cplx e) {
  const double m = cfg.mass;
  const double c = cfg.symmetry.c;
  const double well = cfg.params.well_coefficient();
  const cplx tail = cfg.params.tanh_coefficient();
  if (cfg.symmetry.limit == SymmetryLimit::Spin) {
    const cplx k = m + e - c;
    return {-well * k, tail * k, e * e - m * m + c * (m - e)};
  }
  const cplx k = m - e + c;
  return {well * k, -tail * k, e * e - m * m - c * (m + e)};
}

cplx beta_of(const ModelConfig& cfg, cplx e) {
  const double a2 = cfg.params.alpha * cfg.params.alpha;
  const cplx disc = 1.0 - 4.0 * effective_coefficients(cfg, e).v1_eff / a2;
  if (cfg.params.is_complex()) return 0.5 * (-1.0 + std::sqrt(disc));
  if (e.imag() != 0.0) throw BranchError("complex energy on a real-variant model");
  if (disc.real() < 0.0) throw BranchError("beta discriminant is negative on the real branch");
  return {0.5 * (-1.0 + std::sqrt(disc.real())), 0.0};
}

cplx energy_residual(const ModelConfig& cfg, int n, cplx e) {
  const EffectiveCoefficients eff = effective_coefficients(cfg, e);
  const cplx shift = beta_of(cfg, e) - static_cast<double>(n);
  if (shift == cplx{0.0, 0.0}) throw DegenerateShift("beta - n = 0 in the energy equation");
  const double a2 = cfg.params.alpha * cfg.params.alpha;
  const cplx shift2 = shift * shift;
  return -eff.e_eff - eff.v2_eff * eff.v2_eff / (4.0 * a2 * shift2) - a2 * shift2;
}

BoundState make_bound_state(const ModelConfig& cfg, int n, cplx energy) {
  BoundState s;
  s.n = n;
  s.kappa = cfg.kappa();
  s.energy = energy;
  s.outside_stated_range = cfg.symmetry.limit == SymmetryLimit::Pseudospin && n == 0;

  const EffectiveCoefficients eff = effective_coefficients(cfg, energy);
  const double alpha = cfg.params.alpha;
  const double a2 = alpha * alpha;
  const cplx disc = 1.0 - 4.0 * eff.v1_eff / a2;
  s.beta = 0.5 * (-1.0 + std::sqrt(disc));
  s.flags.beta_real = disc.imag() == 0.0 && disc.real() >= 0.0;

  const cplx shift = s.beta - static_cast<double>(n);
  s.flags.node_condition = shift.real() > 0.0;
  if (shift != cplx{0.0, 0.0}) {
    const cplx tilt = eff.v2_eff / (2.0 * a2 * shift);
    s.lambda = 0.5 * (shift + tilt);
    const cplx left_rate = 0.5 * (shift - tilt);
    s.flags.decay = s.lambda.real() > 0.0 && left_rate.real() > 0.0;
    s.residual = std::abs(energy_residual(cfg, n, energy));
  } else {
    s.lambda = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    s.residual = std::numeric_limits<double>::infinity();
  }

  s.q2 = -2.0 * alpha * s.beta.real();
  if (s.q2 != 0.0) {
    s.q1 = eff.v2_eff.real() / s.q2 - 0.5 * s.q2;
    s.flags.restrictions = s.flags.beta_real && eff.v2_eff.imag() == 0.0 && s.q1 > 0.0 &&
                           s.q2 < 0.0;
  } else {
    s.q1 = std::numeric_limits<double>::quiet_NaN();
  }
  return s;
}

std::vector<double> scan_residual(const ModelConfig& cfg, int n, int points, Exec exec) {
  const auto pts = scan(cfg, n, points, exec);
  std::vector<double> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.value);
  return out;
}

std::vector<BoundState> solve_energy(const ModelConfig& cfg, int n,
                                     SolveDiagnostics* diagnostics, Exec exec) {
  cfg.validate();
  if (cfg.params.is_complex()) {
    throw InvalidArgument("solve_energy handles real variants; use solve_energy_complex for PT");
  }
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (cfg.params.well_coefficient() == 0.0 && n == 0) {
    throw DegenerateShift("beta - n vanishes identically (no well, n = 0)");
  }
  SolveDiagnostics diag;
  const auto [lo, hi] = cfg.window();
  auto f = [&](double e) { return energy_residual(cfg, n, e).real(); };

  std::vector<double> roots;
  for (int points = cfg.scan_points;; points *= 2) {
    const auto pts = scan(cfg, n, points, exec);
    const double step = (hi - lo) / (points - 1);
    auto energy_at = [&](int i) { return i == points - 1 ? hi : lo + i * step; };
    diag = SolveDiagnostics{points, 0, 0};
    roots.clear();
    for (int i = 0; i < points; ++i) {
      const auto& p = pts[static_cast<std::size_t>(i)];
      if (p.status == PointStatus::non_finite) ++diag.skipped_points;
      if (p.status != PointStatus::ok) continue;
      if (p.value == 0.0) {
        roots.push_back(energy_at(i));
        ++diag.brackets;
        continue;
      }
      if (i + 1 >= points) continue;
      const auto& q = pts[static_cast<std::size_t>(i + 1)];
      if (q.status != PointStatus::ok || q.value == 0.0) continue;
      if ((p.value < 0.0) != (q.value < 0.0)) {
        ++diag.brackets;
        roots.push_back(brent_root(f, energy_at(i), energy_at(i + 1), p.value, q.value));
      }
    }
    if (!roots.empty() || points * 2 > cfg.max_scan_points) break;
  }
  if (diagnostics) *diagnostics = diag;

  std::vector<BoundState> states;
  for (double e : roots) {
    BoundState s = make_bound_state(cfg, n, e);
    if (s.residual <= cfg.tolerance) states.push_back(s);
  }
  return states;
}

std::vector<cplx> default_pt_seeds(const ModelConfig& cfg) {
  const auto [lo, hi] = cfg.window();
  const double m = cfg.mass;
  std::vector<cplx> seeds;
  for (double frac : {0.25, 0.75}) {
    const double re = lo + frac * (hi - lo);
    for (double im : {0.1 * m, -0.1 * m, 0.5 * m, -0.5 * m}) seeds.emplace_back(re, im);
  }
  return seeds;
}

std::vector<BoundState> solve_energy_complex(const ModelConfig& cfg, int n,
                                             const std::vector<cplx>& seeds,
                                             ComplexSolveDiagnostics* diagnostics) {
  cfg.validate();
  if (!cfg.params.is_complex()) {
    throw InvalidArgument("solve_energy_complex expects the PT-symmetric variant");
  }
  auto f = [&](cplx e) { return energy_residual(cfg, n, e); };
  ComplexSolveDiagnostics diag;
  std::vector<cplx> found;

  for (const cplx seed : seeds) {
    ++diag.seeds_tried;
    try {
      cplx e = seed;
      cplx fe = f(e);
      bool converged = false;
      for (int iter = 0; iter < 200 && std::isfinite(std::abs(fe)); ++iter) {
        if (std::abs(fe) <= cfg.tolerance) {
          converged = true;
          break;
        }
        const double h = 1e-6 * (1.0 + std::abs(e));
        const cplx slope = (f(e + h) - f(e - h)) / (2.0 * h);
        if (slope == cplx{0.0, 0.0}) break;
        const cplx step = fe / slope;
        double t = 1.0;
        cplx trial = e - step;
        cplx ft = f(trial);
        while (!(std::abs(ft) < std::abs(fe)) && t > 1e-4) {
          t *= 0.5;
          trial = e - t * step;
          ft = f(trial);
        }
        e = trial;
        fe = ft;
      }
      if (!converged) continue;
      // A few undamped polishing steps while they keep improving.
      for (int polish = 0; polish < 3; ++polish) {
        const double h = 1e-6 * (1.0 + std::abs(e));
        const cplx slope = (f(e + h) - f(e - h)) / (2.0 * h);
        const cplx trial = e - fe / slope;
        const cplx ft = f(trial);
        if (!(std::abs(ft) < std::abs(fe))) break;
        e = trial;
        fe = ft;
      }
      ++diag.seeds_converged;
      const bool duplicate = std::any_of(found.begin(), found.end(),
                                         [&](cplx r) { return std::abs(r - e) <= 1e-8; });
      if (!duplicate) found.push_back(e);
    } catch (const Error&) {
      continue;
    }
  }
  if (diagnostics) *diagnostics = diag;

  std::sort(found.begin(), found.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<BoundState> states;
  for (cplx e : found) {
    BoundState s = make_bound_state(cfg, n, e);
    if (s.residual <= cfg.tolerance) states.push_back(s);
  }
  return states;
}

int count_states(const ModelConfig& cfg) {
  int count = 0;
  for (int n = 0; n < 10000; ++n) {
    try {
      if (solve_energy(cfg, n).empty()) break;
    } catch (const DegenerateShift&) {
      break;
    }
    ++count;
  }
  return count;
}

ModelConfig duality_map(const ModelConfig& cfg) {
  ModelConfig out = cfg;
  out.params.v1 = -cfg.params.v1;
  out.params.v2 = -cfg.params.v2;
  if (cfg.params.variant == Variant::Reflectionless) out.params.variant = Variant::RosenMorse;
  out.symmetry.limit = cfg.symmetry.limit == SymmetryLimit::Spin ? SymmetryLimit::Pseudospin
                                                                 : SymmetryLimit::Spin;
  out.symmetry.c = -cfg.symmetry.c;
  if (cfg.search_window) {
    out.search_window = std::make_pair(-cfg.search_window->second, -cfg.search_window->first);
  }
  return out;
}

}  // namespace dirac_rm
