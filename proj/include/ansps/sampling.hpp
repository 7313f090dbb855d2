#ifndef ANSPS_SAMPLING_HPP
#define ANSPS_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ansps/types.hpp"

namespace ansps {

enum class SampleStrategy { Adaptive, Heuristic, Full };

std::string to_string(SampleStrategy s);
SampleStrategy parse_strategy(const std::string& name);  // ansps | heur | full

/// SAA error measure h(N): (N_max - N) / N_max for a finite sum, 1/N when
/// the sample is unbounded (n_max empty). Throws ContractViolation on N = 0
/// or N > N_max.
double saa_error_measure(std::size_t n, std::optional<std::size_t> n_max);

/// ceil(v) that ignores relative rounding noise below 1e-12, so that products
/// like 1.1 * N land on the intended integer.
std::size_t ceil_size(double v);

/// Sample-size controller and cumulative sample realization.
///
/// The sample at every iteration is the first N_k entries of one permutation
/// of {0, ..., N_max - 1} drawn from the seed at construction. With
/// `fresh_on_increase` the permutation is reshuffled whenever the size grows,
/// so a larger sample is a new draw rather than an extension.
class SampleSchedule {
 public:
  struct Options {
    SampleStrategy strategy = SampleStrategy::Adaptive;
    double growth = 1.1;  // r for Adaptive; the HEUR factor
    std::size_t initial = 1;
    bool fresh_on_increase = false;
  };

  SampleSchedule(std::size_t n_max, const Options& options, std::uint64_t seed);

  /// Schedule over an explicit permutation (tests, replays).
  SampleSchedule(std::vector<std::size_t> permutation, std::size_t n_k, const Options& options);

  std::size_t size() const { return n_k_; }
  std::size_t full_size() const { return permutation_.size(); }
  const Options& options() const { return options_; }
  double error_measure() const { return saa_error_measure(n_k_, full_size()); }

  /// First N_k entries of the permutation.
  IndexSpan current_indices() const { return IndexSpan(permutation_.data(), n_k_); }

  /// Moves to the given size. Throws ContractViolation if it shrinks or
  /// exceeds N_max.
  void advance(std::size_t next);

 private:
  std::vector<std::size_t> permutation_;
  std::size_t n_k_;
  Options options_;
  std::mt19937_64 rng_;
};

/// Size for the next iteration given the step length theta_k.
///
/// Adaptive: if theta_k < h(N_k) grow to min{N_max, ceil(max{(1+theta_k) N_k, r N_k})},
/// otherwise keep N_k. Heuristic: ceil(min{r N_k, N_max}). Full: N_max.
std::size_t next_sample_size(const SampleSchedule& schedule, double theta_k);

}  // namespace ansps

#endif
