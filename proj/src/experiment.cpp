#include "ansps/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

#include "ansps/grid_search.hpp"

namespace ansps {

namespace fs = std::filesystem;

void ExperimentSpec::validate() const {
  if (strategies.empty()) throw ContractViolation("empty strategy list");
  if (spectral.empty()) throw ContractViolation("empty spectral rule list");
  if (nonmonotone.empty()) throw ContractViolation("empty nonmonotone rule list");
  if (seeds.empty()) throw ContractViolation("empty seed list");
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw ContractViolation("delta must be finite and >= 0");
  if (!(grid_resolution > 0.0)) throw ContractViolation("grid resolution must be positive");
  if (grid_budget == 0) throw ContractViolation("grid budget must be positive");
  if (std::isnan(target_gap) || std::isnan(target_rel)) throw ContractViolation("target must not be NaN");
  base.validate();
}

std::string Cell::name() const {
  return to_string(strategy) + "_" + to_string(spectral) + "_" + to_string(nonmonotone) + "_seed" +
         std::to_string(seed);
}

const SummaryRow* Summary::best(SampleStrategy s) const {
  for (const auto& r : rows) {
    if (r.cell.strategy == s && r.best_in_strategy) return &r;
  }
  return nullptr;
}

HingeProblem load_problem(const ExperimentSpec& spec) {
  std::shared_ptr<Dataset> data;
  if (const auto* src = std::get_if<LibsvmSource>(&spec.source)) {
    std::ifstream in(src->path);
    if (!in) throw IoError("cannot open data file '" + src->path + "'");
    try {
      data = std::make_shared<Dataset>(parse_libsvm(in));
    } catch (const ParseError& e) {
      throw IoError(src->path + ": " + e.what());
    }
  } else {
    data = std::make_shared<Dataset>(make_synthetic(std::get<SyntheticSpec>(spec.source)));
  }
  return HingeProblem::make(std::move(data), spec.delta);
}

std::vector<Cell> expand_cells(const ExperimentSpec& spec) {
  std::vector<Cell> out;
  for (auto st : spec.strategies)
    for (auto sp : spec.spectral)
      for (auto nm : spec.nonmonotone)
        for (auto seed : spec.seeds) out.push_back({st, sp, nm, seed});
  return out;
}

std::vector<CellResult> run_cells(const ExperimentSpec& spec, const HingeProblem& problem) {
  spec.validate();
  std::error_code ec;
  fs::create_directories(spec.out_dir, ec);
  if (ec || !fs::is_directory(spec.out_dir))
    throw IoError("cannot create output directory '" + spec.out_dir.string() + "'");

  const auto cells = expand_cells(spec);
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        SolverConfig cfg = spec.base;
        cfg.strategy = cells[i].strategy;
        cfg.spectral = cells[i].spectral;
        cfg.nonmonotone = cells[i].nonmonotone;
        cfg.seed = cells[i].seed;
        CellResult res{cells[i], run(cfg, problem), spec.out_dir / (cells[i].name() + ".csv")};
        std::ofstream out(res.csv);
        if (out) write_trace_csv(out, res.trace);
        if (!out) throw IoError("cannot write trace '" + res.csv.string() + "'");
        results[i] = std::move(res);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(spec.jobs, 1, std::max<std::size_t>(cells.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::optional<std::uint64_t> fev_to_target(const RunTrace& trace, double target) {
  for (const auto& row : trace.rows) {
    if (!std::isnan(row.f_full) && row.f_full <= target) return row.fev_cum;
  }
  return std::nullopt;
}

namespace {

double final_full(const RunTrace& trace) {
  for (auto it = trace.rows.rbegin(); it != trace.rows.rend(); ++it) {
    if (!std::isnan(it->f_full)) return it->f_full;
  }
  return std::nan("");
}

bool grid_applicable(const HingeProblem& problem) {
  return problem.dimension() <= 3 && (problem.region.is<L2Ball>() || problem.region.is<Box>());
}

// Coarsens the requested spacing until points * samples fits the budget.
double grid_spacing(const ExperimentSpec& spec, const HingeProblem& problem) {
  double extent = 0.0;
  if (const auto* ball = std::get_if<L2Ball>(&problem.region.shape())) extent = 2.0 * ball->radius;
  if (const auto* box = std::get_if<Box>(&problem.region.shape())) extent = (box->hi - box->lo).maxCoeff();
  const double points = static_cast<double>(spec.grid_budget) / static_cast<double>(problem.sample_count());
  const double per_axis = std::max(2.0, std::pow(points, 1.0 / static_cast<double>(problem.dimension())));
  return std::max(spec.grid_resolution, extent / (per_axis - 1.0));
}

}  // namespace

Summary summarize(const ExperimentSpec& spec, const HingeProblem& problem, const std::vector<CellResult>& results) {
  Summary s;
  s.f_ref_from_grid = grid_applicable(problem);
  if (s.f_ref_from_grid) {
    s.f_ref = grid_search_optimum(problem, grid_spacing(spec, problem)).f;
  } else {
    s.f_ref = std::numeric_limits<double>::infinity();
    for (const auto& r : results)
      for (const auto& row : r.trace.rows)
        if (!std::isnan(row.f_full)) s.f_ref = std::min(s.f_ref, row.f_full);
  }
  s.target = s.f_ref + spec.target_gap + spec.target_rel * std::abs(s.f_ref);

  for (const auto& r : results) s.rows.push_back({r.cell, fev_to_target(r.trace, s.target), final_full(r.trace)});

  std::stable_sort(s.rows.begin(), s.rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
    if (a.fev_to_target.has_value() != b.fev_to_target.has_value()) return a.fev_to_target.has_value();
    if (a.fev_to_target && *a.fev_to_target != *b.fev_to_target) return *a.fev_to_target < *b.fev_to_target;
    if (!a.fev_to_target) return a.final_f_full < b.final_f_full;
    return false;
  });

  // Rows are ranked, so the first row of each strategy is its best cell.
  for (auto st : {SampleStrategy::Adaptive, SampleStrategy::Heuristic, SampleStrategy::Full}) {
    for (auto& row : s.rows) {
      if (row.cell.strategy == st) {
        row.best_in_strategy = true;
        break;
      }
    }
  }
  return s;
}

void write_summary_csv(std::ostream& os, const Summary& summary) {
  os << "rank,strategy,spectral,nonmonotone,seed,fev_to_target,final_f_full,best_in_strategy\n";
  os << std::setprecision(17);
  std::size_t rank = 1;
  for (const auto& r : summary.rows) {
    os << rank++ << ',' << to_string(r.cell.strategy) << ',' << to_string(r.cell.spectral) << ','
       << to_string(r.cell.nonmonotone) << ',' << r.cell.seed << ',';
    if (r.fev_to_target) os << *r.fev_to_target;
    else os << "not reached";
    os << ',' << r.final_f_full << ',' << (r.best_in_strategy ? 1 : 0) << '\n';
  }
}

void print_summary(std::ostream& os, const Summary& summary) {
  os << "f_ref = " << std::setprecision(10) << summary.f_ref << (summary.f_ref_from_grid ? " (grid)" : " (best seen)")
     << ", target = " << summary.target << '\n';
  os << std::left << std::setw(6) << "rank" << std::setw(34) << "cell" << std::setw(16) << "fev_to_target"
     << "final_f_full\n";
  std::size_t rank = 1;
  for (const auto& r : summary.rows) {
    os << std::setw(6) << rank++ << std::setw(34) << r.cell.name() << std::setw(16)
       << (r.fev_to_target ? std::to_string(*r.fev_to_target) : std::string("not reached")) << r.final_f_full
       << (r.best_in_strategy ? "  *" : "") << '\n';
  }
}

std::vector<CellResult> cmd_run(const ExperimentSpec& spec) {
  spec.validate();
  const HingeProblem problem = load_problem(spec);
  return run_cells(spec, problem);
}

namespace {

Summary compare_impl(const ExperimentSpec& spec) {
  spec.validate();
  ExperimentSpec effective = spec;
  if (effective.base.full_stride == 0) effective.base.full_stride = 1;
  const HingeProblem problem = load_problem(effective);
  const auto results = run_cells(effective, problem);
  Summary summary = summarize(effective, problem, results);
  const auto path = effective.out_dir / "summary.csv";
  std::ofstream out(path);
  if (out) write_summary_csv(out, summary);
  if (!out) throw IoError("cannot write summary '" + path.string() + "'");
  return summary;
}

}  // namespace

Summary cmd_compare(const ExperimentSpec& spec) { return compare_impl(spec); }

Summary cmd_sweep(const ExperimentSpec& spec) { return compare_impl(spec); }

}  // namespace ansps
