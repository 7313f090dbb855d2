#ifndef ANSPS_GRID_SEARCH_HPP
#define ANSPS_GRID_SEARCH_HPP

#include "ansps/hinge.hpp"

namespace ansps {

struct GridOptimum {
  Vector x;
  double f;
  std::size_t points;  // grid points evaluated
};

/// Brute-force reference minimizer of the full-sample objective for tiny
/// problems (n <= 3, ball or box region).
///
/// Scans the region's bounding box with spacing `resolution` (upper endpoint
/// always included), projects each grid point onto the region and keeps the
/// first point attaining the smallest value. Independent of the solver.
GridOptimum grid_search_optimum(const HingeProblem& problem, double resolution);

}  // namespace ansps

#endif
