#include "dirac_rm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirac_rm/errors.hpp"

namespace dirac_rm {

namespace {

constexpr double kEigenTolerance = 1e-12;

double sech2(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

std::pair<double, double> domain(const OracleConfig& cfg) {
  if (cfg.geometry == Geometry::FullLine) return {-cfg.extent, cfg.extent};
  return {0.0, cfg.extent};
}

std::pair<double, double> gershgorin(const TridiagonalOperator& op) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = op.diagonal.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
    lo = std::min(lo, op.diagonal[i] - radius);
    hi = std::max(hi, op.diagonal[i] + radius);
  }
  return {lo, hi};
}

// Gaussian elimination with partial pivoting on a tridiagonal system
// (same scheme as LAPACK dgtsv). Zero pivots are nudged to a tiny value,
// which is what inverse iteration wants.
std::vector<double> solve_shifted(const TridiagonalOperator& op, double shift,
                                  std::vector<double> rhs) {
  const std::size_t n = op.diagonal.size();
  std::vector<double> d(n);
  std::vector<double> du(op.off_diagonal);
  std::vector<double> dl(op.off_diagonal);
  for (std::size_t i = 0; i < n; ++i) d[i] = op.diagonal[i] - shift;
  const double tiny = std::numeric_limits<double>::epsilon() *
                      std::max(1.0, std::abs(gershgorin(op).second));
  auto guard = [&](double& pivot) {
    if (pivot == 0.0) pivot = tiny;
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      guard(d[i]);
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      rhs[i + 1] -= fact * rhs[i];
      dl[i] = 0.0;
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        dl[i] = du[i + 1];
        du[i + 1] = -fact * dl[i];
      } else {
        dl[i] = 0.0;
      }
      du[i] = temp;
      const double b = rhs[i];
      rhs[i] = rhs[i + 1];
      rhs[i + 1] = b - fact * rhs[i + 1];
    }
  }
  guard(d[n - 1]);
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / d[n - 1];
  if (n > 1) x[n - 2] = (rhs[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
  for (std::size_t k = n - 2; k-- > 0;) {
    x[k] = (rhs[k] - du[k] * x[k + 1] - dl[k] * x[k + 2]) / d[k];
  }
  return x;
}

double g_value(const ModelConfig& model, const OracleConfig& cfg, int n, double e) {
  const EffectiveCoefficients eff = effective_coefficients(model, e);
  const TridiagonalOperator op = discretize(eff, model.params.alpha, cfg);
  return eigenvalue(op, n) - eff.e_eff.real();
}

}  // namespace

OracleConfig OracleConfig::full_line(double length, int points) {
  OracleConfig cfg;
  cfg.geometry = Geometry::FullLine;
  cfg.extent = length;
  cfg.points = points;
  return cfg;
}

OracleConfig OracleConfig::half_line(double r_max, int points) {
  OracleConfig cfg;
  cfg.geometry = Geometry::HalfLine;
  cfg.extent = r_max;
  cfg.points = points;
  return cfg;
}

void OracleConfig::validate(double alpha) const {
  if (points < 200) throw InvalidArgument("oracle needs at least 200 grid points");
  if (!(extent > 5.0 / alpha)) throw InvalidArgument("oracle extent must exceed 5/alpha");
  if (!(outer_tolerance > 0.0)) throw InvalidArgument("outer tolerance must be positive");
  if (scan_points < 3) throw InvalidArgument("oracle scan needs at least 3 energies");
}

double OracleConfig::spacing() const {
  const auto [lo, hi] = domain(*this);
  return (hi - lo) / (points + 1);
}

TridiagonalOperator discretize_potential(const std::function<double(double)>& potential,
                                         const OracleConfig& cfg) {
  const auto [lo, hi] = domain(cfg);
  const double h = (hi - lo) / (cfg.points + 1);
  const double inv_h2 = 1.0 / (h * h);
  const auto n = static_cast<std::size_t>(cfg.points);
  TridiagonalOperator op;
  op.diagonal.resize(n);
  op.r.resize(n);
  op.off_diagonal.assign(n - 1, -inv_h2);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = lo + static_cast<double>(i + 1) * h;
    op.r[i] = r;
    op.diagonal[i] = 2.0 * inv_h2 + potential(r);
  }
  return op;
}

TridiagonalOperator discretize(const EffectiveCoefficients& eff, double alpha,
                               const OracleConfig& cfg) {
  if (eff.v1_eff.imag() != 0.0 || eff.v2_eff.imag() != 0.0) {
    throw InvalidArgument("oracle discretizes real potentials only");
  }
  const double v1 = eff.v1_eff.real();
  const double v2 = eff.v2_eff.real();
  return discretize_potential(
      [=](double r) { return v1 * sech2(alpha * r) + v2 * std::tanh(alpha * r); }, cfg);
}

int sturm_count(const TridiagonalOperator& op, double x) {
  const std::size_t n = op.diagonal.size();
  const double tiny = std::numeric_limits<double>::min() * 1e8;
  int count = 0;
  double q = op.diagonal[0] - x;
  if (q == 0.0) q = -tiny;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = op.off_diagonal[i - 1];
    q = op.diagonal[i] - x - e * e / q;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

double eigenvalue(const TridiagonalOperator& op, int index) {
  const int n = static_cast<int>(op.diagonal.size());
  if (index < 0 || index >= n) throw InvalidArgument("eigenvalue index out of range");
  auto [lo, hi] = gershgorin(op);
  lo -= kEigenTolerance;
  hi += kEigenTolerance;
  while (hi - lo > kEigenTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(op, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> eigenvalues(const TridiagonalOperator& op, int k, Exec exec) {
  const int n = static_cast<int>(op.diagonal.size());
  if (k > n) throw InvalidArgument("requested more eigenvalues than the matrix order");
  if (k < 0) throw InvalidArgument("k must be non-negative");
  std::vector<double> out(static_cast<std::size_t>(k));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = eigenvalue(op, i);
  } else {
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = eigenvalue(op, i);
  }
  return out;
}

std::vector<double> eigenvector(const TridiagonalOperator& op, double value) {
  const std::size_t n = op.diagonal.size();
  std::vector<double> x(n, 1.0);
  for (int iter = 0; iter < 4; ++iter) {
    x = solve_shifted(op, value, x);
    double peak = 0.0;
    for (double v : x) peak = std::max(peak, std::abs(v));
    if (!(peak > 0.0) || !std::isfinite(peak)) {
      throw NoConvergence("inverse iteration produced a degenerate vector");
    }
    for (double& v : x) v /= peak;
  }
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double y = (op.diagonal[i] - value) * x[i];
    if (i > 0) y += op.off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) y += op.off_diagonal[i] * x[i + 1];
    residual = std::max(residual, std::abs(y));
  }
  if (residual > 1e-6 * (1.0 + std::abs(value))) {
    throw NoConvergence("inverse iteration did not converge to an eigenvector");
  }
  return x;
}

int node_count(const TridiagonalOperator& op, double value) {
  const std::vector<double> v = eigenvector(op, value);
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  const double floor = 1e-10 * peak;
  int nodes = 0;
  double last = 0.0;
  for (double x : v) {
    if (std::abs(x) <= floor) continue;
    if (last != 0.0 && (x < 0.0) != (last < 0.0)) ++nodes;
    last = x;
  }
  return nodes;
}

std::vector<double> self_consistent_scan(const ModelConfig& model, const OracleConfig& cfg, int n,
                                         Exec exec) {
  if (model.params.is_complex()) throw InvalidArgument("oracle covers real variants only");
  cfg.validate(model.params.alpha);
  const auto [lo, hi] = model.window();
  const int points = cfg.scan_points;
  const double step = (hi - lo) / (points - 1);
  std::vector<double> g(static_cast<std::size_t>(points));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < points; ++i) {
      g[static_cast<std::size_t>(i)] =
          g_value(model, cfg, n, i == points - 1 ? hi : lo + i * step);
    }
  } else {
    for (int i = 0; i < points; ++i) {
      g[static_cast<std::size_t>(i)] =
          g_value(model, cfg, n, i == points - 1 ? hi : lo + i * step);
    }
  }
  return g;
}

std::vector<double> self_consistent_energies(const ModelConfig& model, const OracleConfig& cfg,
                                             int n, Exec exec) {
  const std::vector<double> g = self_consistent_scan(model, cfg, n, exec);
  const auto [lo, hi] = model.window();
  const int points = cfg.scan_points;
  const double step = (hi - lo) / (points - 1);
  auto energy_at = [&](int i) { return i == points - 1 ? hi : lo + i * step; };

  std::vector<double> roots;
  for (int i = 0; i + 1 < points; ++i) {
    const double ga = g[static_cast<std::size_t>(i)];
    const double gb = g[static_cast<std::size_t>(i + 1)];
    if (ga == 0.0) {
      roots.push_back(energy_at(i));
      continue;
    }
    if ((ga < 0.0) == (gb < 0.0) || gb == 0.0) continue;
    double a = energy_at(i);
    double b = energy_at(i + 1);
    const bool a_negative = ga < 0.0;
    while (b - a > cfg.outer_tolerance) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double gm = g_value(model, cfg, n, mid);
      if ((gm < 0.0) == a_negative) {
        a = mid;
      } else {
        b = mid;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  if (!g.empty() && g.back() == 0.0) roots.push_back(hi);
  return roots;
}

double self_consistent_energy(const ModelConfig& model, const OracleConfig& cfg, int n,
                              Exec exec) {
  const std::vector<double> roots = self_consistent_energies(model, cfg, n, exec);
  if (roots.empty()) throw NoBoundState("no self-consistent crossing for this n in the window");
  return roots.front();
}

}  // namespace dirac_rm
