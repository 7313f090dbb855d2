#include "ansps/hinge.hpp"

#include <algorithm>
#include <cmath>

namespace ansps {

namespace {

void check_request(const HingeProblem& p, IndexSpan indices, const Vector& x) {
  if (indices.empty()) throw ContractViolation("SAA evaluation needs a nonempty index set");
  if (static_cast<std::size_t>(x.size()) != p.dimension())
    throw ContractViolation("iterate dimension does not match the data");
  const std::size_t count = p.sample_count();
  for (auto i : indices) {
    if (i >= count) throw ContractViolation("sample index out of range");
  }
}

void compute_margins(const Dataset& d, IndexSpan indices, const Vector& x, std::vector<double>& out) {
  out.resize(indices.size());
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const auto i = indices[t];
    out[t] = d.labels[i] * d.rows[i].dot(x);
  }
}

double value_from(const HingeProblem& p, const std::vector<double>& margins, const Vector& x) {
  double loss = 0.0;
  for (double m : margins) loss += std::max(0.0, 1.0 - m);
  return p.delta * x.squaredNorm() + loss / static_cast<double>(margins.size());
}

// At the kink (1 - z x'w = 0) the hinge term contributes zero.
Vector subgradient_from(const HingeProblem& p, const std::vector<double>& margins, IndexSpan indices,
                        const Vector& x) {
  const Dataset& d = *p.data;
  Vector g = Vector::Zero(x.size());
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (1.0 - margins[t] <= 0.0) continue;
    const auto i = indices[t];
    const auto& row = d.rows[i];
    const double z = d.labels[i];
    for (std::size_t j = 0; j < row.index.size(); ++j) g[row.index[j]] -= z * row.value[j];
  }
  g /= static_cast<double>(indices.size());
  if (p.delta != 0.0) g += 2.0 * p.delta * x;
  return g;
}

}  // namespace

FeasibleRegion default_hinge_region(double delta) {
  if (delta < 0.0 || !std::isfinite(delta)) throw ContractViolation("delta must be finite and >= 0");
  return delta > 0.0 ? FeasibleRegion::ball(1.0 / std::sqrt(delta)) : FeasibleRegion::ball(std::sqrt(0.1));
}

HingeProblem HingeProblem::make(std::shared_ptr<const Dataset> data, double delta,
                                std::optional<FeasibleRegion> region) {
  if (!data) throw ContractViolation("hinge problem needs a data set");
  data->validate();
  if (data->size() == 0) throw ContractViolation("hinge problem needs at least one sample");
  HingeProblem p;
  p.region = region ? *region : default_hinge_region(delta);
  p.data = std::move(data);
  p.delta = delta;
  return p;
}

double hinge_value(const HingeProblem& problem, IndexSpan indices, const Vector& x) {
  check_request(problem, indices, x);
  std::vector<double> m;
  compute_margins(*problem.data, indices, x, m);
  return value_from(problem, m, x);
}

Vector hinge_subgradient(const HingeProblem& problem, IndexSpan indices, const Vector& x) {
  check_request(problem, indices, x);
  std::vector<double> m;
  compute_margins(*problem.data, indices, x, m);
  return subgradient_from(problem, m, indices, x);
}

double full_objective(const HingeProblem& problem, const Vector& x) {
  const Dataset& d = *problem.data;
  if (static_cast<std::size_t>(x.size()) != d.n)
    throw ContractViolation("iterate dimension does not match the data");
  double loss = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) loss += std::max(0.0, 1.0 - d.labels[i] * d.rows[i].dot(x));
  return problem.delta * x.squaredNorm() + loss / static_cast<double>(d.size());
}

HingeOracle::HingeOracle(const HingeProblem& problem) : problem_(&problem) {}

const std::vector<double>& HingeOracle::margins(const Vector& x, IndexSpan indices) {
  check_request(*problem_, indices, x);
  const bool hit = cache_valid_ && cache_x_.size() == x.size() && cache_x_ == x &&
                   std::equal(indices.begin(), indices.end(), cache_indices_.begin(), cache_indices_.end());
  if (!hit) {
    compute_margins(*problem_->data, indices, x, cache_margins_);
    fev_ += indices.size();
    cache_x_ = x;
    cache_indices_.assign(indices.begin(), indices.end());
    cache_valid_ = true;
  }
  return cache_margins_;
}

double HingeOracle::value(const Vector& x, IndexSpan indices) {
  return value_from(*problem_, margins(x, indices), x);
}

Vector HingeOracle::subgradient(const Vector& x, IndexSpan indices) {
  return subgradient_from(*problem_, margins(x, indices), indices, x);
}

ValueAndSubgradient HingeOracle::value_and_subgradient(const Vector& x, IndexSpan indices) {
  const auto& m = margins(x, indices);
  return {value_from(*problem_, m, x), subgradient_from(*problem_, m, indices, x)};
}

}  // namespace ansps
