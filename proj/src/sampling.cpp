#include "ansps/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ansps {

std::string to_string(SampleStrategy s) {
  switch (s) {
    case SampleStrategy::Adaptive: return "ansps";
    case SampleStrategy::Heuristic: return "heur";
    case SampleStrategy::Full: return "full";
  }
  return "?";
}

SampleStrategy parse_strategy(const std::string& name) {
  if (name == "ansps") return SampleStrategy::Adaptive;
  if (name == "heur") return SampleStrategy::Heuristic;
  if (name == "full") return SampleStrategy::Full;
  throw ContractViolation("unknown sampling strategy '" + name + "'");
}

double saa_error_measure(std::size_t n, std::optional<std::size_t> n_max) {
  if (n == 0) throw ContractViolation("sample size must be at least 1");
  if (!n_max) return 1.0 / static_cast<double>(n);
  if (n > *n_max) throw ContractViolation("sample size exceeds the full sample");
  return static_cast<double>(*n_max - n) / static_cast<double>(*n_max);
}

std::size_t ceil_size(double v) {
  return static_cast<std::size_t>(std::ceil(v - std::abs(v) * 1e-12));
}

SampleSchedule::SampleSchedule(std::size_t n_max, const Options& options, std::uint64_t seed)
    : permutation_(n_max), n_k_(0), options_(options), rng_(seed) {
  if (n_max == 0) throw ContractViolation("full sample must be nonempty");
  if (options.initial == 0 || options.initial > n_max)
    throw ContractViolation("initial sample size must lie in [1, N_max]");
  if (!(options.growth > 1.0)) throw ContractViolation("growth factor must exceed 1");
  std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
  std::shuffle(permutation_.begin(), permutation_.end(), rng_);
  n_k_ = options.strategy == SampleStrategy::Full ? n_max : options.initial;
}

SampleSchedule::SampleSchedule(std::vector<std::size_t> permutation, std::size_t n_k, const Options& options)
    : permutation_(std::move(permutation)), n_k_(n_k), options_(options), rng_(0) {
  if (permutation_.empty()) throw ContractViolation("full sample must be nonempty");
  if (n_k == 0 || n_k > permutation_.size()) throw ContractViolation("sample size must lie in [1, N_max]");
  std::vector<std::size_t> sorted = permutation_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw ContractViolation("not a permutation of 0..N_max-1");
  }
  if (options.strategy == SampleStrategy::Full) n_k_ = permutation_.size();
}

void SampleSchedule::advance(std::size_t next) {
  if (next < n_k_ || next > full_size()) throw ContractViolation("sample size must be nondecreasing and <= N_max");
  if (next > n_k_ && options_.fresh_on_increase) std::shuffle(permutation_.begin(), permutation_.end(), rng_);
  n_k_ = next;
}

std::size_t next_sample_size(const SampleSchedule& schedule, double theta_k) {
  const std::size_t n_k = schedule.size();
  const std::size_t n_max = schedule.full_size();
  const double r = schedule.options().growth;
  const double nk = static_cast<double>(n_k);
  switch (schedule.options().strategy) {
    case SampleStrategy::Full:
      return n_max;
    case SampleStrategy::Heuristic:
      return std::min(n_max, ceil_size(std::min(r * nk, static_cast<double>(n_max))));
    case SampleStrategy::Adaptive:
      if (!(theta_k < schedule.error_measure())) return n_k;
      return std::min(n_max, ceil_size(std::max((1.0 + theta_k) * nk, r * nk)));
  }
  return n_k;
}

}  // namespace ansps
