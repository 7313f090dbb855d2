#include "ansps/grid_search.hpp"

#include <cmath>
#include <limits>

namespace ansps {

namespace {

std::vector<double> axis(double lo, double hi, double step) {
  std::vector<double> pts;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step));
  pts.reserve(count + 2);
  for (std::size_t i = 0; i <= count; ++i) pts.push_back(lo + static_cast<double>(i) * step);
  if (pts.back() < hi) pts.push_back(hi);
  return pts;
}

}  // namespace

GridOptimum grid_search_optimum(const HingeProblem& problem, double resolution) {
  const std::size_t n = problem.dimension();
  if (n == 0 || n > 3) throw ContractViolation("grid search supports 1 <= n <= 3 only");
  if (!(resolution > 0.0)) throw ContractViolation("grid resolution must be positive");

  Vector lo(static_cast<Eigen::Index>(n)), hi(static_cast<Eigen::Index>(n));
  if (const auto* ball = std::get_if<L2Ball>(&problem.region.shape())) {
    lo.setConstant(-ball->radius);
    hi.setConstant(ball->radius);
  } else if (const auto* box = std::get_if<Box>(&problem.region.shape())) {
    if (static_cast<std::size_t>(box->lo.size()) != n)
      throw ContractViolation("box dimension does not match the data");
    if (!box->lo.allFinite() || !box->hi.allFinite())
      throw ContractViolation("grid search needs a bounded box");
    lo = box->lo;
    hi = box->hi;
  } else {
    throw ContractViolation("grid search needs a ball or box region");
  }

  std::vector<std::vector<double>> axes;
  for (std::size_t d = 0; d < 3; ++d)
    axes.push_back(d < n ? axis(lo[static_cast<Eigen::Index>(d)], hi[static_cast<Eigen::Index>(d)], resolution)
                         : std::vector<double>{0.0});

  GridOptimum best{Vector::Zero(static_cast<Eigen::Index>(n)), std::numeric_limits<double>::infinity(), 0};
  Vector point(static_cast<Eigen::Index>(n));
  for (double a : axes[0]) {
    for (double b : axes[1]) {
      for (double c : axes[2]) {
        const double coords[3] = {a, b, c};
        for (std::size_t d = 0; d < n; ++d) point[static_cast<Eigen::Index>(d)] = coords[d];
        const Vector feasible = project(problem.region, point);
        const double f = full_objective(problem, feasible);
        ++best.points;
        if (f < best.f) {
          best.f = f;
          best.x = feasible;
        }
      }
    }
  }
  return best;
}

}  // namespace ansps
