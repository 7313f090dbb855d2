#include "ansps/linesearch.hpp"

#include <algorithm>

namespace ansps {

double step_upper_bound(std::uint64_t k, double c2) {
  if (k == 0) throw ContractViolation("step interval is defined for k >= 1");
  return std::min(1.0, c2 / static_cast<double>(k));
}

std::vector<double> candidate_steps(std::uint64_t k, double c2, std::size_t m) {
  if (k == 0) throw ContractViolation("candidate steps are defined for k >= 1");
  if (m == 0) throw ContractViolation("need at least one candidate step");
  if (!(c2 > 0.0)) throw ContractViolation("C2 must be positive");
  const double lo = 1.0 / static_cast<double>(k);
  const double hi = step_upper_bound(k, c2);
  if (!(hi > lo)) return {};
  std::vector<double> out(m);
  const double width = (hi - lo) / static_cast<double>(m);
  for (std::size_t j = 1; j < m; ++j) out[j - 1] = lo + static_cast<double>(j) * width;
  out[m - 1] = hi;
  return out;
}

LineSearchResult line_search(const std::function<double(const Vector&)>& f, const Vector& x, const Vector& p,
                             double reference, double eta, const std::vector<double>& candidates, std::uint64_t k) {
  if (k == 0) throw ContractViolation("line search runs for k >= 1");
  if (!(eta > 0.0)) throw ContractViolation("eta must be positive");
  if (!std::is_sorted(candidates.begin(), candidates.end()))
    throw ContractViolation("candidates must be sorted ascending");

  LineSearchResult out{1.0 / static_cast<double>(k), std::nullopt, {}, {}};
  const double pp = p.squaredNorm();
  for (std::size_t j = candidates.size(); j-- > 0;) {
    const double alpha = candidates[j];
    const double value = f(trial_point(x, alpha, p));
    out.tried_alphas.push_back(alpha);
    out.tried_values.push_back(value);
    if (value <= reference - eta * alpha * pp) {
      out.alpha = alpha;
      out.accepted = j;
      break;
    }
  }
  return out;
}

}  // namespace ansps
