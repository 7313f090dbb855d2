#ifndef ANSPS_EXPERIMENT_HPP
#define ANSPS_EXPERIMENT_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ansps/dataset.hpp"
#include "ansps/hinge.hpp"
#include "ansps/solver.hpp"

namespace ansps {

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LibsvmSource {
  std::string path;
};

/// What to run: one cell per (strategy, spectral, nonmonotone, seed).
struct ExperimentSpec {
  std::variant<LibsvmSource, SyntheticSpec> source = SyntheticSpec{};
  double delta = 10.0;
  std::vector<SampleStrategy> strategies{SampleStrategy::Adaptive};
  std::vector<SpectralRule> spectral{SpectralRule::BB1};
  std::vector<NonmonotoneRule> nonmonotone{NonmonotoneRule::ADA};
  std::vector<std::uint64_t> seeds{1};
  SolverConfig base;  // strategy, rules and seed are overwritten per cell
  std::filesystem::path out_dir = "out";
  std::size_t jobs = 1;

  // Comparison target: f_ref + target_gap + target_rel * |f_ref|.
  double target_gap = 0.0;
  double target_rel = 0.05;
  double grid_resolution = 1e-3;
  std::uint64_t grid_budget = 20'000'000;  // grid points times samples; coarser spacing beyond it

  /// Throws ContractViolation on empty lists or bad parameters.
  void validate() const;
};

struct Cell {
  SampleStrategy strategy;
  SpectralRule spectral;
  NonmonotoneRule nonmonotone;
  std::uint64_t seed;

  std::string name() const;  // e.g. ansps_bb1_ada_seed1
};

struct CellResult {
  Cell cell;
  RunTrace trace;
  std::filesystem::path csv;
};

struct SummaryRow {
  Cell cell;
  std::optional<std::uint64_t> fev_to_target;
  double final_f_full;
  bool best_in_strategy = false;
};

struct Summary {
  double f_ref;
  bool f_ref_from_grid;
  double target;
  std::vector<SummaryRow> rows;  // ranked: reached first by FEV, then the rest

  const SummaryRow* best(SampleStrategy s) const;
};

HingeProblem load_problem(const ExperimentSpec& spec);

std::vector<Cell> expand_cells(const ExperimentSpec& spec);

/// Runs every cell (up to `jobs` in parallel) and writes one CSV per cell.
/// Throws IoError, NumericAbort.
std::vector<CellResult> run_cells(const ExperimentSpec& spec, const HingeProblem& problem);

/// First fev_cum at which a sampled f_full is <= target.
std::optional<std::uint64_t> fev_to_target(const RunTrace& trace, double target);

/// Ranks the results against f_ref: the grid optimum when n <= 3 and the
/// region is a ball or box, otherwise the best f_full seen in any cell.
Summary summarize(const ExperimentSpec& spec, const HingeProblem& problem, const std::vector<CellResult>& results);

void write_summary_csv(std::ostream& os, const Summary& summary);
void print_summary(std::ostream& os, const Summary& summary);

std::vector<CellResult> cmd_run(const ExperimentSpec& spec);
Summary cmd_compare(const ExperimentSpec& spec);  // writes summary.csv
Summary cmd_sweep(const ExperimentSpec& spec);    // same, all rule lists required nonempty

}  // namespace ansps

#endif
