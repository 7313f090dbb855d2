#ifndef ANSPS_HINGE_HPP
#define ANSPS_HINGE_HPP

#include <memory>
#include <optional>

#include "ansps/dataset.hpp"
#include "ansps/oracle.hpp"
#include "ansps/region.hpp"

namespace ansps {

/// Finite-sum hinge loss with optional l2 term:
///   f_I(x) = delta ||x||^2 + (1/|I|) sum_{i in I} max{0, 1 - z_i x'w_i}.
struct HingeProblem {
  std::shared_ptr<const Dataset> data;
  double delta = 0.0;
  FeasibleRegion region = FeasibleRegion::whole_space();

  /// Default region: ball of radius 1/sqrt(delta) when delta > 0, otherwise
  /// the ball of radius sqrt(0.1).
  static HingeProblem make(std::shared_ptr<const Dataset> data, double delta,
                           std::optional<FeasibleRegion> region = std::nullopt);

  std::size_t dimension() const { return data->n; }
  std::size_t sample_count() const { return data->size(); }
};

FeasibleRegion default_hinge_region(double delta);

/// Uncharged reference evaluations. Throw ContractViolation on an empty or
/// out-of-range index set or a dimension mismatch.
double hinge_value(const HingeProblem& problem, IndexSpan indices, const Vector& x);
Vector hinge_subgradient(const HingeProblem& problem, IndexSpan indices, const Vector& x);

/// f over the whole data set, uncharged (diagnostics and oracles).
double full_objective(const HingeProblem& problem, const Vector& x);

/// FEV-charged oracle for one solver run.
///
/// Margins z_i x'w_i are memoized for the most recent (x, I) pair, compared by
/// value. A value or subgradient request at that pair costs nothing; any other
/// request charges |I| scalar products and replaces the memo.
class HingeOracle final : public SaaOracle {
 public:
  explicit HingeOracle(const HingeProblem& problem);

  std::size_t dimension() const override { return problem_->dimension(); }
  std::size_t sample_count() const override { return problem_->sample_count(); }

  double value(const Vector& x, IndexSpan indices) override;
  Vector subgradient(const Vector& x, IndexSpan indices) override;
  ValueAndSubgradient value_and_subgradient(const Vector& x, IndexSpan indices) override;

  std::uint64_t fev() const override { return fev_; }

  const HingeProblem& problem() const { return *problem_; }

 private:
  const std::vector<double>& margins(const Vector& x, IndexSpan indices);
  double value_from_margins(const Vector& x) const;
  Vector subgradient_from_margins(const Vector& x, IndexSpan indices) const;

  const HingeProblem* problem_;
  std::uint64_t fev_ = 0;
  bool cache_valid_ = false;
  Vector cache_x_;
  std::vector<std::size_t> cache_indices_;
  std::vector<double> cache_margins_;
};

}  // namespace ansps

#endif
