#ifndef ANSPS_LINESEARCH_HPP
#define ANSPS_LINESEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ansps/types.hpp"

namespace ansps {

/// Upper end of the step interval, min{1, C2 / k}.
double step_upper_bound(std::uint64_t k, double c2);

/// m equally spaced trial steps 1/k + j (abar - 1/k) / m, j = 1..m, inside
/// (1/k, abar_k]; the last one is exactly abar_k. Empty when abar_k <= 1/k.
/// Throws ContractViolation for k = 0, m = 0 or C2 <= 0.
std::vector<double> candidate_steps(std::uint64_t k, double c2, std::size_t m);

struct LineSearchResult {
  double alpha;
  std::optional<std::size_t> accepted;  // 0-based index into the candidates
  std::vector<double> tried_alphas;     // in evaluation order (largest first)
  std::vector<double> tried_values;
};

/// Evaluates f along x + alpha p for the candidates from largest to smallest
/// and accepts the first one with f <= F_k - eta alpha ||p||^2. Falls back to
/// 1/k (no evaluation) when none qualifies or the list is empty.
LineSearchResult line_search(const std::function<double(const Vector&)>& f, const Vector& x, const Vector& p,
                             double reference, double eta, const std::vector<double>& candidates, std::uint64_t k);

/// Trial point shared by the line search and the main update so both produce
/// bit-identical vectors.
inline Vector trial_point(const Vector& x, double alpha, const Vector& p) { return x + alpha * p; }

}  // namespace ansps

#endif
