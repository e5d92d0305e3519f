#pragma once

#include <functional>
#include <vector>

#include "dirac_rm/grid.hpp"
#include "dirac_rm/spectrum.hpp"
#include "dirac_rm/types.hpp"

namespace dirac_rm {

/// Brute-force finite-difference setup. `extent` is L for the full line
/// [-L, L] and r_max for the half line [0, r_max]; Dirichlet at both ends.
struct OracleConfig {
  Geometry geometry = Geometry::FullLine;
  double extent = 15.0;
  int points = 6000;  // interior unknowns
  double outer_tolerance = 1e-12;
  int inner_k = 1;
  int scan_points = 200;  // energies sampled before bisection

  static OracleConfig full_line(double length, int points);
  static OracleConfig half_line(double r_max, int points);

  void validate(double alpha) const;
  double spacing() const;
};

/// Symmetric tridiagonal matrix with the interior grid it was built on.
struct TridiagonalOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
  std::vector<double> r;
};

/// -d^2/dr^2 + Re(V1eff sech^2(ar) + V2eff tanh(ar)), central differences.
TridiagonalOperator discretize(const EffectiveCoefficients& eff, double alpha,
                               const OracleConfig& cfg);
TridiagonalOperator discretize_potential(const std::function<double(double)>& potential,
                                         const OracleConfig& cfg);

/// Number of eigenvalues strictly below x.
int sturm_count(const TridiagonalOperator& op, double x);

/// index-th smallest eigenvalue (0-based), bisection to 1e-12 absolute.
double eigenvalue(const TridiagonalOperator& op, int index);

/// k smallest eigenvalues, ascending.
std::vector<double> eigenvalues(const TridiagonalOperator& op, int k, Exec exec = Exec::parallel);

/// Inverse iteration with partial-pivoting tridiagonal solves.
std::vector<double> eigenvector(const TridiagonalOperator& op, double eigenvalue);

/// Sign changes of the eigenvector, ignoring components below 1e-10 of
/// the peak (roundoff in the exponentially small tails).
int node_count(const TridiagonalOperator& op, double eigenvalue);

/// g(E) = mu_n(E) - Re E_eff(E) on a uniform energy grid over the model window.
std::vector<double> self_consistent_scan(const ModelConfig& model, const OracleConfig& cfg,
                                         int n, Exec exec = Exec::parallel);

/// All self-consistent crossings in the window, ascending.
std::vector<double> self_consistent_energies(const ModelConfig& model, const OracleConfig& cfg,
                                             int n, Exec exec = Exec::parallel);

/// Lowest crossing; throws NoBoundState when there is none.
double self_consistent_energy(const ModelConfig& model, const OracleConfig& cfg, int n,
                              Exec exec = Exec::parallel);

}  // namespace dirac_rm
