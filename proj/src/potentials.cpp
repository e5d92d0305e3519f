#include "dirac_rm/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirac_rm/errors.hpp"

namespace dirac_rm {

namespace {

double sech2(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::RosenMorse:
      return "rosen-morse";
    case Variant::Eckart:
      return "eckart";
    case Variant::PtSymmetric:
      return "pt";
    case Variant::Reflectionless:
      return "reflectionless";
  }
  return "unknown";
}

std::optional<Variant> variant_from_string(std::string_view name) {
  if (name == "rosen-morse" || name == "rm") return Variant::RosenMorse;
  if (name == "eckart") return Variant::Eckart;
  if (name == "pt" || name == "pt-symmetric") return Variant::PtSymmetric;
  if (name == "reflectionless") return Variant::Reflectionless;
  return std::nullopt;
}

PotentialParams PotentialParams::rosen_morse(double v1, double v2, double alpha) {
  PotentialParams p{v1, v2, alpha, Variant::RosenMorse};
  p.validate();
  return p;
}

PotentialParams PotentialParams::eckart(double v1, double v2, double alpha) {
  PotentialParams p{v1, v2, alpha, Variant::Eckart};
  p.validate();
  return p;
}

PotentialParams PotentialParams::pt_symmetric(double v1, double v2, double alpha) {
  PotentialParams p{v1, v2, alpha, Variant::PtSymmetric};
  p.validate();
  return p;
}

PotentialParams PotentialParams::reflectionless(int gamma, double alpha) {
  if (gamma < 1) {
    throw InvalidArgument("reflectionless potential needs a positive integer gamma, got " +
                          std::to_string(gamma));
  }
  PotentialParams p{0.5 * gamma * (gamma + 1.0), 0.0, alpha, Variant::Reflectionless};
  p.validate();
  return p;
}

std::optional<int> PotentialParams::gamma() const {
  if (v1 <= 0.0) return std::nullopt;
  // v1 = g(g+1)/2  =>  g = (-1 + sqrt(1 + 8 v1)) / 2
  const double g = 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * v1));
  const double rounded = std::round(g);
  if (rounded < 1.0 || std::abs(g - rounded) > 1e-9) return std::nullopt;
  return static_cast<int>(rounded);
}

void PotentialParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("alpha must be positive and finite");
  }
  if (!std::isfinite(v1) || !std::isfinite(v2)) {
    throw InvalidArgument("potential strengths must be finite");
  }
  if (variant == Variant::Reflectionless) {
    if (v2 != 0.0) throw InvalidArgument("reflectionless potential requires v2 = 0");
    if (!gamma()) {
      throw InvalidArgument("reflectionless potential requires v1 = gamma(gamma+1)/2");
    }
  }
}

double PotentialParams::well_coefficient() const {
  return variant == Variant::Eckart ? -v1 : v1;
}

cplx PotentialParams::tanh_coefficient() const {
  switch (variant) {
    case Variant::Eckart:
      return {-v2, 0.0};
    case Variant::PtSymmetric:
      return {0.0, v2};
    case Variant::Reflectionless:
      return {0.0, 0.0};
    case Variant::RosenMorse:
      break;
  }
  return {v2, 0.0};
}

cplx evaluate(const PotentialParams& params, double r) {
  const double x = params.alpha * r;
  const double well = params.well_coefficient();
  const cplx tail = params.tanh_coefficient();
  const double t = std::tanh(x);
  return cplx(-well * sech2(x), 0.0) + tail * t;
}

PotentialFn sigma_of(const PotentialParams& params) {
  return [params](double r) { return evaluate(params, r); };
}

PotentialFn delta_of(const PotentialParams& params) {
  return [params](double r) { return evaluate(params, r); };
}

bool pt_symmetry_check(const PotentialParams& params, std::span<const double> grid) {
  if (grid.empty()) throw InvalidArgument("empty grid");
  double extent = 0.0;
  for (double r : grid) extent = std::max(extent, std::abs(r));
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(grid[i] + grid[n - 1 - i]) > 1e-12 * (1.0 + extent)) {
      throw InvalidArgument("grid is not symmetric about r = 0");
    }
  }
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx v = evaluate(params, grid[i]);
    const cplx mirrored = evaluate(params, -grid[i]);
    worst = std::max(worst, std::abs(v - std::conj(mirrored)));
    scale = std::max(scale, std::abs(v));
  }
  return worst <= 1e-12 * (1.0 + scale);
}

}  // namespace dirac_rm
