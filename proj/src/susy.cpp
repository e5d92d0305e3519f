#include "dirac_rm/susy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dirac_rm/errors.hpp"

namespace dirac_rm {

namespace {

// 1 / (1 + e^{-x}) without overflow.
double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// ln(1 + e^x) without overflow.
double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double sech2(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

double discriminant_term(double v1, double alpha, double mass, double c, SymmetryLimit limit,
                         double energy) {
  if (limit == SymmetryLimit::Spin) return 4.0 * v1 * (mass + energy - c) / (alpha * alpha);
  return -4.0 * v1 * (mass - energy + c) / (alpha * alpha);
}

double bracket(double v2_eff, double a) { return v2_eff / a - 0.5 * a; }

}  // namespace

double beta_param(double v1, double alpha, double mass, double energy, double c,
                  SymmetryLimit limit) {
  const double disc = 1.0 + discriminant_term(v1, alpha, mass, c, limit, energy);
  if (disc < 0.0) throw BranchError("beta discriminant is negative on the real branch");
  return 0.5 * (-1.0 + std::sqrt(disc));
}

cplx beta_param_complex(double v1, double alpha, double mass, cplx energy, double c,
                        SymmetryLimit limit) {
  const double a2 = alpha * alpha;
  const cplx term = limit == SymmetryLimit::Spin ? 4.0 * v1 * (mass + energy - c) / a2
                                                 : -4.0 * v1 * (mass - energy + c) / a2;
  return 0.5 * (-1.0 + std::sqrt(1.0 + term));
}

double q2_of(double alpha, double beta) { return -2.0 * alpha * beta; }

double q1_of(double v2_eff, double q2) {
  if (q2 == 0.0) throw DegenerateShift("Q2 = 0: the superpotential constant is undefined");
  return bracket(v2_eff, q2);
}

Superpotential make_superpotential(double alpha, double beta, double v2_eff) {
  const double q2 = q2_of(alpha, beta);
  return {q1_of(v2_eff, q2), q2, alpha, v2_eff};
}

double superpotential_value(const Superpotential& sp, double r) {
  return sp.q1 + sp.q2 * logistic(2.0 * sp.alpha * r);
}

double superpotential_derivative(const Superpotential& sp, double r) {
  const double s = logistic(2.0 * sp.alpha * r);
  return 2.0 * sp.alpha * sp.q2 * s * (1.0 - s);
}

double ground_state_log(const Superpotential& sp, double r, GroundStateMode mode) {
  const double x = 2.0 * sp.alpha * r;
  const double exponent = sp.q2 / (2.0 * sp.alpha);
  if (mode == GroundStateMode::paper_literal) {
    return -sp.q1 * r - exponent * softplus(x);
  }
  return sp.q1 * r + exponent * (softplus(x) - std::numbers::ln2);
}

double ground_state_unnormalized(const Superpotential& sp, double r, GroundStateMode mode) {
  return std::exp(ground_state_log(sp, r, mode));
}

double ground_energy(const Superpotential& sp) { return -sp.q1 * sp.q1 - sp.v2_eff; }

PartnerPair partner_potentials(const Superpotential& sp, double r) {
  const double w = superpotential_value(sp, r);
  const double dw = superpotential_derivative(sp, r);
  return {w * w + dw, w * w - dw};
}

Superpotential shifted(const Superpotential& sp, double a) {
  return {q1_of(sp.v2_eff, a), a, sp.alpha, sp.v2_eff};
}

ShiftChain make_shift_chain(double a0, double alpha, int n, double v2_eff) {
  ShiftChain chain{a0, 2.0 * alpha, {}};
  chain.remainders.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 1; k <= n; ++k) chain.remainders.push_back(remainder(chain, k, v2_eff));
  return chain;
}

double remainder(const ShiftChain& chain, int k, double v2_eff) {
  if (k < 1) throw InvalidArgument("remainder index starts at 1");
  for (int j = 0; j <= k; ++j) {
    if (chain.a(j) == 0.0) throw DegenerateShift("shift parameter a_k vanished in the chain");
  }
  const double prev = bracket(v2_eff, chain.a(k - 1));
  const double curr = bracket(v2_eff, chain.a(k));
  return prev * prev - curr * curr;
}

ShiftedEnergy shifted_energy(const ShiftChain& chain, int n, double v2_eff) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  for (int j = 0; j <= n; ++j) {
    if (chain.a(j) == 0.0) throw DegenerateShift("shift parameter a_k vanished in the chain");
  }
  double summed = 0.0;
  for (int k = 1; k <= n; ++k) summed += remainder(chain, k, v2_eff);
  const double first = bracket(v2_eff, chain.a(0));
  const double last = bracket(v2_eff, chain.a(n));
  const double telescoped = first * first - last * last;
  const double e0 = -first * first - v2_eff;
  return {summed, telescoped, telescoped + e0};
}

GridResidual riccati_residual(const Superpotential& sp, double v1_eff, double v2_eff, double e0,
                              std::span<const double> grid, GroundStateMode orientation) {
  const double sign = orientation == GroundStateMode::normalizable ? -1.0 : 1.0;
  GridResidual out;
  double rhs_max = 0.0;
  for (double r : grid) {
    const double w = sign * superpotential_value(sp, r);
    const double dw = sign * superpotential_derivative(sp, r);
    const double x = sp.alpha * r;
    const double rhs = v1_eff * sech2(x) + v2_eff * std::tanh(x) - e0;
    out.max_abs = std::max(out.max_abs, std::abs(w * w - dw - rhs));
    rhs_max = std::max(rhs_max, std::abs(rhs));
  }
  out.scale = 1.0 + rhs_max;
  return out;
}

GridResidual shape_invariance_residual(const Superpotential& sp, std::span<const double> grid) {
  return shape_invariance_residual(sp, grid, 2.0 * sp.alpha);
}

GridResidual shape_invariance_residual(const Superpotential& sp, std::span<const double> grid,
                                       double shift) {
  const double a0 = sp.q2;
  const double a1 = a0 - shift;
  const Superpotential next = shifted(sp, a1);
  const double r_a1 = std::pow(bracket(sp.v2_eff, a0), 2) - std::pow(bracket(sp.v2_eff, a1), 2);
  GridResidual out;
  double u_max = 0.0;
  for (double r : grid) {
    const double u_plus = partner_potentials(sp, r).plus;
    const double u_minus = partner_potentials(next, r).minus;
    out.max_abs = std::max(out.max_abs, std::abs(u_plus - u_minus - r_a1));
    u_max = std::max(u_max, std::abs(u_plus));
  }
  out.scale = 1.0 + u_max;
  return out;
}

}  // namespace dirac_rm
