#ifndef ANSPS_SOLVER_HPP
#define ANSPS_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

#include "ansps/hinge.hpp"
#include "ansps/nonmonotone.hpp"
#include "ansps/oracle.hpp"
#include "ansps/region.hpp"
#include "ansps/sampling.hpp"
#include "ansps/spectral.hpp"
#include "ansps/trace.hpp"

namespace ansps {

enum class StartMode { RandomInRegion, Given, ZeroProjected };

struct SolverConfig {
  double c2 = 100.0;
  double eta = 1e-4;
  std::size_t m = 2;
  double zeta_lo = 1e-4;
  double zeta_hi = 1e4;
  double zeta_0 = 1.0;
  double r = 1.1;
  double n0_frac = 0.1;                    // N_0 = ceil(n0_frac * N_max)
  std::optional<std::size_t> n0;           // overrides n0_frac
  SampleStrategy strategy = SampleStrategy::Adaptive;
  SpectralRule spectral = SpectralRule::BB1;
  NonmonotoneRule nonmonotone = NonmonotoneRule::ADA;
  std::uint64_t seed = 1;
  std::uint64_t max_iterations = 1000;
  std::uint64_t fev_budget = std::numeric_limits<std::uint64_t>::max();
  StartMode start = StartMode::RandomInRegion;
  Vector x0;                               // used with StartMode::Given
  std::uint64_t full_stride = 10;          // f_full sampled every stride rows (0 = never)
  bool fresh_on_increase = false;

  /// Throws ContractViolation when a parameter is out of range.
  void validate() const;
  std::size_t initial_sample_size(std::size_t n_max) const;
};

/// Thrown when an iterate or objective value becomes non-finite. Carries the
/// trace up to the failing iteration.
class NumericAbort : public std::runtime_error {
 public:
  NumericAbort(const std::string& what, RunTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const RunTrace& trace() const { return trace_; }

 private:
  RunTrace trace_;
};

/// Draws x_0 according to the start mode; random draws are deterministic in
/// the seed (ball: uniform direction times radius * U^{1/n}).
Vector initial_point(const FeasibleRegion& region, std::size_t n, const SolverConfig& config);

/// Adaptive sample size nonmonotone spectral projected subgradient iteration.
///
/// One `step()` is one full iteration: subgradient and scaling, step size
/// from the candidate grid, projection, spectral update from a same-sample
/// subgradient difference, sample-size update, then the new reference value.
/// The HEUR and FULL baselines run through the same loop with a different
/// sampling strategy.
class AnspsSolver {
 public:
  using FullObjective = std::function<double(const Vector&)>;

  AnspsSolver(SaaOracle& oracle, FeasibleRegion region, const SolverConfig& config,
              FullObjective full_objective = {});

  void step();

  /// Appends the terminal row (no step) and returns the trace.
  const RunTrace& finish();

  std::uint64_t iteration() const { return k_; }
  const Vector& x() const { return x_; }
  double f_current() const { return nonmono_.current(); }
  double reference_value() const { return nonmono_.reference_value(); }
  double zeta() const { return spectral_.current(); }
  const SampleSchedule& schedule() const { return schedule_; }
  const RunTrace& trace() const { return trace_; }
  std::uint64_t fev() const { return oracle_.fev(); }
  bool finished() const { return finished_; }

 private:
  double sampled_full(std::uint64_t k, bool force);
  [[noreturn]] void abort(const std::string& what);

  SaaOracle& oracle_;
  FeasibleRegion region_;
  SolverConfig config_;
  FullObjective full_;
  SampleSchedule schedule_;
  SpectralState spectral_;
  Vector x_;
  NonmonotoneState nonmono_;
  std::uint64_t k_ = 0;
  RunTrace trace_;
  bool finished_ = false;
};

/// Runs until max_iterations steps or the FEV budget is exhausted.
RunTrace run(const SolverConfig& config, const HingeProblem& problem);

struct ComplexityReport {
  double k_bar;                              // iterations bound to reach N_max
  std::optional<std::uint64_t> observed;     // first k with N_k = N_max
  bool bound_holds() const { return !observed || static_cast<double>(*observed) <= k_bar; }
};

/// k_bar = (ceil(C2 zeta_hi N) + 1) log(N / N_0) / log(r). Informational.
ComplexityReport complexity_report(const RunTrace& trace, const SolverConfig& config, std::size_t n_max);

}  // namespace ansps

#endif
