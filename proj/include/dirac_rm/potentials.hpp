#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "dirac_rm/types.hpp"

namespace dirac_rm {

enum class Variant { RosenMorse, Eckart, PtSymmetric, Reflectionless };

std::string_view to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view name);

/// Rosen-Morse family -V1 sech^2(alpha r) + V2 tanh(alpha r) with the
/// special-case sign maps applied at evaluation time.
///
/// `v1` and `v2` are stored as the user quotes them for the variant:
///   RosenMorse      -v1 sech^2 + v2 tanh
///   Eckart          +v1 sech^2 - v2 tanh
///   PtSymmetric     -v1 sech^2 + i v2 tanh   (v2 real magnitude)
///   Reflectionless  -v1 sech^2, v1 = gamma(gamma+1)/2, v2 = 0
struct PotentialParams {
  double v1 = 0.0;
  double v2 = 0.0;
  double alpha = 1.0;
  Variant variant = Variant::RosenMorse;

  static PotentialParams rosen_morse(double v1, double v2, double alpha);
  static PotentialParams eckart(double v1, double v2, double alpha);
  static PotentialParams pt_symmetric(double v1, double v2, double alpha);
  static PotentialParams reflectionless(int gamma, double alpha);

  /// Throws InvalidArgument when an invariant is broken.
  void validate() const;

  /// Coefficient W of the well term in the canonical form -W sech^2 + T tanh.
  double well_coefficient() const;
  /// Coefficient T of tanh in the canonical form (imaginary for PT).
  cplx tanh_coefficient() const;

  bool is_complex() const { return variant == Variant::PtSymmetric; }
  std::optional<int> gamma() const;

  friend bool operator==(const PotentialParams&, const PotentialParams&) = default;
};

using PotentialFn = std::function<cplx(double)>;

cplx evaluate(const PotentialParams& params, double r);

/// Sigma(r) = V + S for the spin-symmetry branch.
PotentialFn sigma_of(const PotentialParams& params);
/// Delta(r) = V - S for the pseudospin branch. Same functional form.
PotentialFn delta_of(const PotentialParams& params);

/// True iff max_r |V(r) - conj(V(-r))| <= 1e-12 (1 + max|V|) on a grid
/// symmetric about r = 0. Throws InvalidArgument for asymmetric grids.
bool pt_symmetry_check(const PotentialParams& params, std::span<const double> grid);

}  // namespace dirac_rm
