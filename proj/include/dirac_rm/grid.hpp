#pragma once

#include <string_view>
#include <vector>

namespace dirac_rm {

enum class Geometry { FullLine, HalfLine };

std::string_view to_string(Geometry g);

/// Uniform sampling grid, strictly increasing.
struct Grid {
  std::vector<double> r;
  double spacing = 0.0;
  Geometry geometry = Geometry::FullLine;

  std::size_t size() const { return r.size(); }
};

Grid uniform_grid(double lo, double hi, int points, Geometry geometry);

/// 2001 points on [-extent/alpha, extent/alpha] by default.
Grid full_line_grid(double alpha, int points = 2001, double extent = 15.0);

/// [offset/alpha, r_max/alpha], offset keeps r = 0 off the grid.
Grid half_line_grid(double alpha, int points = 2001, double r_max = 30.0,
                    double offset = 1e-3);

}  // namespace dirac_rm
