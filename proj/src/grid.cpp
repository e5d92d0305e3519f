#include "dirac_rm/grid.hpp"

#include "dirac_rm/errors.hpp"

namespace dirac_rm {

std::string_view to_string(Geometry g) {
  return g == Geometry::FullLine ? "full" : "half";
}

Grid uniform_grid(double lo, double hi, int points, Geometry geometry) {
  if (points < 2 || !(hi > lo)) throw InvalidArgument("grid needs hi > lo and >= 2 points");
  Grid grid;
  grid.geometry = geometry;
  grid.spacing = (hi - lo) / (points - 1);
  grid.r.resize(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid.r[static_cast<std::size_t>(i)] = lo + i * grid.spacing;
  grid.r.back() = hi;
  return grid;
}

Grid full_line_grid(double alpha, int points, double extent) {
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  Grid grid = uniform_grid(-extent / alpha, extent / alpha, points, Geometry::FullLine);
  // Symmetric by construction: mirror the left half so r_i = -r_{N-1-i} exactly.
  const std::size_t n = grid.r.size();
  for (std::size_t i = 0; i < n / 2; ++i) grid.r[n - 1 - i] = -grid.r[i];
  if (n % 2 == 1) grid.r[n / 2] = 0.0;
  return grid;
}

Grid half_line_grid(double alpha, int points, double r_max, double offset) {
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  return uniform_grid(offset / alpha, r_max / alpha, points, Geometry::HalfLine);
}

}  // namespace dirac_rm
