// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "ansps/dataset.hpp"
#include "ansps/experiment.hpp"
#include "ansps/grid_search.hpp"
#include "ansps/nonmonotone.hpp"
#include "ansps/region.hpp"
#include "ansps/sampling.hpp"
#include "test_support.hpp"

using namespace ansps;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

HingeProblem synthetic(std::size_t n, std::size_t samples, std::uint64_t seed, double delta) {
  SyntheticSpec s;
  s.n = n;
  s.samples = samples;
  s.seed = seed;
  return HingeProblem::make(std::make_shared<const Dataset>(make_synthetic(s)), delta);
}

Outcome invariant_suite() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_real_distribution<double> logscale(-3, 3);

  std::size_t proj_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = dim(rng);
    const auto region = testkit::random_region(rng, n);
    const Vector x = testkit::random_vector(rng, n, std::exp(logscale(rng)));
    const Vector y = testkit::random_vector(rng, n, std::exp(logscale(rng)));
    const Vector px = project(region, x), py = project(region, y);
    const double scale = std::max(1.0, std::max(x.norm(), y.norm()));
    if ((project(region, px) - px).norm() > 1e-12 * scale) ++proj_bad;
    if ((px - py).norm() > (x - y).norm() + 1e-12 * scale) ++proj_bad;
    if (distance_to_region(region, px) > 1e-12 * scale) ++proj_bad;
  }
  out.require(proj_bad == 0, std::to_string(proj_bad) + " projection violations");

  std::size_t convex_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = dim(rng);
    const auto problem = synthetic(n, 40, 1000 + t, t % 2 == 0 ? 10.0 : 0.0);
    std::vector<std::size_t> idx(problem.sample_count());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(1 + t % idx.size());
    const Vector x = testkit::random_vector(rng, n), y = testkit::random_vector(rng, n);
    const double fx = hinge_value(problem, idx, x), fy = hinge_value(problem, idx, y);
    const Vector g = hinge_subgradient(problem, idx, x);
    if (fy < fx + g.dot(y - x) - 1e-9) ++convex_bad;
  }
  out.require(convex_bad == 0, std::to_string(convex_bad) + " convexity violations");

  std::uint64_t rows = 0;
  std::size_t run_bad = 0;
  for (int seed = 0; seed < 20; ++seed) {
    const auto problem = synthetic(2 + seed % 9, 200 + 50 * seed, 500 + seed, seed % 4 == 0 ? 0.0 : 10.0);
    SolverConfig c;
    c.seed = static_cast<std::uint64_t>(seed) + 1;
    c.strategy = static_cast<SampleStrategy>(seed % 3);
    c.spectral = static_cast<SpectralRule>(seed % 4);
    c.nonmonotone = static_cast<NonmonotoneRule>((seed / 3) % 4);
    c.full_stride = 1;
    const auto check = testkit::run_with_invariants(problem, c, 200);
    rows += check.rows_checked;
    if (!check.violations.empty()) {
      ++run_bad;
      out.require(false, "seed " + std::to_string(seed) + ": " + check.violations.front());
    }
  }
  out.detail = "projection 1000 cases, convexity 1000 pairs, " + std::to_string(rows) + " rows over 20 runs" +
               (out.detail.empty() ? "" : " | " + out.detail);
  return out;
}

Outcome oracle_convergence() {
  Outcome out;
  std::string summary;
  double worst_gap = -INFINITY, slowest = 0;
  for (double delta : {10.0, 0.0}) {
    const auto problem = synthetic(2, 4, 7, delta);
    const auto coarse = grid_search_optimum(problem, 1e-3);
    const auto fine = grid_search_optimum(problem, 1e-4);
    out.require(std::abs(coarse.f - fine.f) <= 1e-3,
                "grid cross-check delta=" + fmt(delta) + " differs by " + fmt(coarse.f - fine.f));
    for (auto rule : {SpectralRule::BB1, SpectralRule::BB2, SpectralRule::ABB, SpectralRule::ABBmin}) {
      SolverConfig c;
      c.spectral = rule;
      c.nonmonotone = NonmonotoneRule::ADA;
      c.max_iterations = 2000;
      c.full_stride = 0;
      const auto t0 = std::chrono::steady_clock::now();
      const auto trace = run(c, problem);
      const double elapsed = seconds_since(t0);
      const double gap = trace.rows.back().f_full - coarse.f;
      worst_gap = std::max(worst_gap, gap);
      slowest = std::max(slowest, elapsed);
      out.require(gap <= 1e-2, "delta=" + fmt(delta) + " " + to_string(rule) + " gap " + fmt(gap));
      out.require(elapsed < 5.0, "delta=" + fmt(delta) + " " + to_string(rule) + " took " + fmt(elapsed) + "s");
    }
  }
  out.detail = "worst gap " + fmt(worst_gap) + " (tol 1e-2), slowest run " + fmt(slowest) + "s (limit 5s)" +
               (out.detail.empty() ? "" : " | " + out.detail);
  return out;
}

Outcome full_sample_attainment() {
  Outcome out;
  const std::size_t n_max = 3000;
  const auto problem = synthetic(60, n_max, 1, 10.0);
  std::uint64_t latest = 0;
  double k_bar = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SolverConfig c;
    c.seed = seed;
    c.full_stride = 0;
    HingeOracle oracle(problem);
    AnspsSolver solver(oracle, problem.region, c);
    const std::uint64_t limit = 50 * n_max;
    while (solver.schedule().size() < n_max && solver.iteration() < limit) solver.step();
    const auto& trace = solver.finish();
    const auto report = complexity_report(trace, c, n_max);
    k_bar = report.k_bar;
    if (!report.observed) {
      out.require(false, "seed " + std::to_string(seed) + " never reached N_max");
      continue;
    }
    latest = std::max(latest, *report.observed);
    out.require(report.bound_holds(), "seed " + std::to_string(seed) + " exceeded k_bar");
  }
  out.detail = "latest attainment k=" + std::to_string(latest) + " (limit " + std::to_string(50 * n_max) +
               ", k_bar " + fmt(k_bar) + ")" + (out.detail.empty() ? "" : " | " + out.detail);
  return out;
}

Outcome trigger_growth() {
  Outcome out;
  std::vector<std::size_t> perm(10000);
  std::iota(perm.begin(), perm.end(), 0);
  SampleSchedule::Options o;
  o.strategy = SampleStrategy::Adaptive;
  o.initial = 100;
  SampleSchedule s(perm, 100, o);
  out.require(next_sample_size(s, 0.05) == 110, "r-branch != 110");
  out.require(next_sample_size(s, 0.2) == 120, "theta-branch != 120");
  SampleSchedule half(std::vector<std::size_t>(perm.begin(), perm.begin() + 200), 100, o);
  out.require(next_sample_size(half, 0.5) == 100, "no-trigger branch changed N");
  std::size_t ceil_bad = 0;
  for (std::size_t n = 1; n <= 5000; ++n) {
    SampleSchedule g(perm, n, o);
    if (next_sample_size(g, 0.0) != std::min<std::size_t>((11 * n + 9) / 10, 10000)) ++ceil_bad;
  }
  out.require(ceil_bad == 0, std::to_string(ceil_bad) + " ceil(1.1N) mismatches");

  NonmonotoneState::Options no;
  no.rule = NonmonotoneRule::CCA;
  NonmonotoneState cca(no, 2.0);
  cca.advance(1.0);
  const double d1 = cca.reference_value();
  out.require(std::abs(d1 - 2.7 / 1.85) <= 1e-9, "CCA D_1 = " + fmt(d1));
  out.detail = "110/120/no-trigger/ceil(1.1N) for N<=5000, CCA D_1=" + fmt(d1) +
               (out.detail.empty() ? "" : " | " + out.detail);
  return out;
}

Outcome strategy_trend() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "ansps_acceptance_trend";
  fs::remove_all(dir);
  ExperimentSpec spec;
  SyntheticSpec s;
  s.n = 60;
  s.samples = 10000;
  s.seed = 1;
  spec.source = s;
  spec.delta = 10.0;
  spec.strategies = {SampleStrategy::Adaptive, SampleStrategy::Heuristic, SampleStrategy::Full};
  spec.spectral = {SpectralRule::BB1, SpectralRule::BB2, SpectralRule::ABB, SpectralRule::ABBmin};
  spec.nonmonotone = {NonmonotoneRule::Max, NonmonotoneRule::CCA, NonmonotoneRule::Mon, NonmonotoneRule::ADA};
  spec.seeds = {1};
  spec.base.max_iterations = 150;
  spec.base.full_stride = 1;
  spec.out_dir = dir;
  spec.jobs = std::max(1u, std::thread::hardware_concurrency());
  spec.target_gap = 0.0;
  spec.target_rel = 0.05;

  const auto t0 = std::chrono::steady_clock::now();
  const Summary summary = cmd_sweep(spec);
  const double elapsed = seconds_since(t0);
  fs::remove_all(dir);

  const SummaryRow* adaptive = summary.best(SampleStrategy::Adaptive);
  const SummaryRow* full = summary.best(SampleStrategy::Full);
  out.require(adaptive && adaptive->fev_to_target.has_value(), "adaptive never reached the target");
  out.require(full && full->fev_to_target.has_value(), "full never reached the target");
  if (out.pass) {
    const double a = static_cast<double>(*adaptive->fev_to_target), f = static_cast<double>(*full->fev_to_target);
    out.require(a <= f, "adaptive FEV " + fmt(a) + " > full FEV " + fmt(f));
    out.detail = "adaptive " + fmt(a) + " <= full " + fmt(f) + " FEV (ratio " + fmt(f / a) +
                 ", 1.5x " + (f >= 1.5 * a ? "met" : "not met") + ", ungated)" +
                 (out.detail.empty() ? "" : " | " + out.detail);
  }
  out.require(elapsed < 120.0, "sweep took " + fmt(elapsed) + "s");
  out.detail += ", target " + fmt(summary.target) + ", " + fmt(elapsed) + "s";
  return out;
}

Outcome determinism() {
  Outcome out;
  std::size_t checked = 0;
  for (int i = 0; i < 12; ++i) {
    const auto problem = synthetic(3 + i % 4, 500, 40 + i, i % 2 ? 0.0 : 10.0);
    SolverConfig c;
    c.seed = 7 + i;
    c.strategy = static_cast<SampleStrategy>(i % 3);
    c.spectral = static_cast<SpectralRule>(i % 4);
    c.nonmonotone = static_cast<NonmonotoneRule>((i / 3) % 4);
    c.max_iterations = 150;
    c.full_stride = 1;
    const std::string a = trace_csv(run(c, problem));
    const std::string b = trace_csv(run(c, problem));
    out.require(a == b, "config " + std::to_string(i) + " differs between runs");
    ++checked;
  }
  const fs::path dir = fs::temp_directory_path() / "ansps_acceptance_determinism";
  fs::remove_all(dir);
  ExperimentSpec spec;
  spec.seeds = {1, 2};
  spec.out_dir = dir;
  spec.base.max_iterations = 100;
  spec.jobs = 2;
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  const auto first = cmd_run(spec);
  std::vector<std::string> bytes;
  for (const auto& r : first) bytes.push_back(slurp(r.csv));
  const auto second = cmd_run(spec);
  for (std::size_t i = 0; i < second.size(); ++i) out.require(slurp(second[i].csv) == bytes[i], "CSV file differs");
  fs::remove_all(dir);
  out.detail = std::to_string(checked) + " in-memory configs + 2 written CSV files byte-identical" +
               (out.detail.empty() ? "" : " | " + out.detail);
  return out;
}

Outcome parser() {
  Outcome out;
  const std::string text =
      "+1 1:0.5 3:2.0 7:-1.25\n"
      "-1 2:1e-3 4:0.333333333333333314829616256247\n"
      "-1\n"
      "+1 5:3 1:-2\n"
      "-1 6:123456.75 7:0\n";
  std::istringstream in(text);
  const Dataset first = parse_libsvm(in);
  std::ostringstream os;
  write_libsvm(os, first);
  std::istringstream back(os.str());
  const Dataset second = parse_libsvm(back, first.n);
  out.require(first == second && first.size() == 5, "5-line round trip mismatch");

  std::istringstream zero_one("1 1:1\n0 2:1\n");
  const Dataset a = parse_libsvm(zero_one);
  out.require(a.labels == std::vector<int>{1, -1}, "{0,1} labels not remapped");
  std::istringstream one_two("2 1:1\n1 2:1\n");
  const Dataset b = parse_libsvm(one_two);
  out.require(b.labels == std::vector<int>{-1, 1}, "{1,2} labels not remapped (expected 2 -> -1, 1 -> +1)");
  out.detail = "round trip, {0,1} and {1,2} remaps" + (out.detail.empty() ? "" : " | " + out.detail);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 invariant suite", invariant_suite},
      {"2 oracle convergence", oracle_convergence},
      {"3 full-sample attainment", full_sample_attainment},
      {"4 trigger/growth exactness", trigger_growth},
      {"5 strategy trend", strategy_trend},
      {"6 determinism", determinism},
      {"7 parser", parser},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
