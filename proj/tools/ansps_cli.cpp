// Experiment harness: run, compare and sweep sampling strategies and rule
// combinations on hinge-loss problems, writing one CSV trace per cell.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 numeric abort.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "ansps/experiment.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kNumeric = 3 };

struct Flags {
  std::string data;
  std::string synthetic;
  double delta = 10.0;
  std::optional<std::string> strategy;
  std::optional<std::string> spectral;
  std::optional<std::string> nonmonotone;
  double c2 = 100.0;
  double eta = 1e-4;
  std::size_t m = 2;
  double r = 1.1;
  double n0_frac = 0.1;
  std::vector<std::uint64_t> seeds{1};
  std::uint64_t max_iters = 1000;
  std::uint64_t fev_budget = 0;
  std::string out = "out";
  std::uint64_t full_stride = 10;
  std::size_t jobs = 1;
  double target_gap = 0.0;
  double target_rel = 0.05;
};

void add_common(CLI::App& cmd, Flags& f) {
  auto* data = cmd.add_option("--data", f.data, "LIBSVM data file");
  auto* syn = cmd.add_option("--synthetic", f.synthetic, "synthetic problem n,N,seed[,margin]");
  data->excludes(syn);
  syn->excludes(data);
  cmd.add_option("--delta", f.delta, "l2 weight (0 drops the regularizer)")->capture_default_str();
  cmd.add_option("--strategy", f.strategy, "ansps, heur, full (comma separated)");
  cmd.add_option("--spectral", f.spectral, "bb1, bb2, abb, abbmin, const (comma separated)");
  cmd.add_option("--nonmonotone", f.nonmonotone, "max, cca, mon, ada (comma separated)");
  cmd.add_option("--C2", f.c2, "step interval constant")->capture_default_str();
  cmd.add_option("--eta", f.eta, "sufficient decrease parameter")->capture_default_str();
  cmd.add_option("--m", f.m, "line search candidates")->capture_default_str();
  cmd.add_option("--r", f.r, "minimum sample growth factor")->capture_default_str();
  cmd.add_option("--n0-frac", f.n0_frac, "initial sample fraction")->capture_default_str();
  cmd.add_option("--seed", f.seeds, "run seeds (comma separated)")->delimiter(',')->capture_default_str();
  cmd.add_option("--max-iters", f.max_iters, "iteration budget")->capture_default_str();
  cmd.add_option("--fev-budget", f.fev_budget, "scalar product budget (0 = unlimited)")->capture_default_str();
  cmd.add_option("--out", f.out, "output directory")->capture_default_str();
  cmd.add_option("--full-stride", f.full_stride, "rows between full objective samples")->capture_default_str();
  cmd.add_option("--jobs", f.jobs, "cells run in parallel")->capture_default_str();
}

void add_target(CLI::App& cmd, Flags& f) {
  cmd.add_option("--target-gap", f.target_gap, "absolute gap above f_ref")->capture_default_str();
  cmd.add_option("--target-rel", f.target_rel, "relative gap above f_ref")->capture_default_str();
}

ansps::SyntheticSpec parse_synthetic(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 3 && parts.size() != 4)
    throw ansps::ContractViolation("--synthetic expects n,N,seed[,margin]");
  ansps::SyntheticSpec s;
  try {
    s.n = std::stoul(parts[0]);
    s.samples = std::stoul(parts[1]);
    s.seed = std::stoull(parts[2]);
    if (parts.size() == 4) s.margin = std::stod(parts[3]);
  } catch (const std::exception&) {
    throw ansps::ContractViolation("--synthetic expects n,N,seed[,margin]");
  }
  return s;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::optional<std::string>& text, const std::vector<T>& fallback, Parse parse,
                          const char* what) {
  if (!text) return fallback;
  // Split by hand: empty tokens ("a,,b", trailing comma) are usage errors.
  std::vector<T> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text->find(',', start);
    const std::string token = text->substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty()) throw ansps::ContractViolation(std::string("empty entry in ") + what + " list");
    out.push_back(parse(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ansps::ExperimentSpec build_spec(const Flags& f, bool sweep) {
  ansps::ExperimentSpec spec;
  if (!f.data.empty()) spec.source = ansps::LibsvmSource{f.data};
  else if (!f.synthetic.empty()) spec.source = parse_synthetic(f.synthetic);
  else throw ansps::ContractViolation("one of --data or --synthetic is required");

  using namespace ansps;
  spec.delta = f.delta;
  spec.strategies = parse_list<SampleStrategy>(f.strategy, {SampleStrategy::Adaptive}, parse_strategy, "strategy");
  const std::vector<SpectralRule> all_spectral{SpectralRule::BB1, SpectralRule::BB2, SpectralRule::ABB,
                                               SpectralRule::ABBmin};
  const std::vector<NonmonotoneRule> all_nonmono{NonmonotoneRule::Max, NonmonotoneRule::CCA, NonmonotoneRule::Mon,
                                                 NonmonotoneRule::ADA};
  spec.spectral = parse_list<SpectralRule>(f.spectral, sweep ? all_spectral : std::vector{SpectralRule::BB1},
                                           parse_spectral_rule, "spectral rule");
  spec.nonmonotone = parse_list<NonmonotoneRule>(
      f.nonmonotone, sweep ? all_nonmono : std::vector{NonmonotoneRule::ADA}, parse_nonmonotone_rule,
      "nonmonotone rule");
  spec.seeds = f.seeds;
  spec.base.c2 = f.c2;
  spec.base.eta = f.eta;
  spec.base.m = f.m;
  spec.base.r = f.r;
  spec.base.n0_frac = f.n0_frac;
  spec.base.max_iterations = f.max_iters;
  if (f.fev_budget > 0) spec.base.fev_budget = f.fev_budget;
  spec.base.full_stride = f.full_stride;
  spec.out_dir = f.out;
  spec.jobs = f.jobs;
  spec.target_gap = f.target_gap;
  spec.target_rel = f.target_rel;
  spec.validate();
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive sample size spectral projected subgradient experiments"};
  app.require_subcommand(1);
  Flags flags;
  auto* run_cmd = app.add_subcommand("run", "run each cell and write its CSV trace");
  auto* compare_cmd = app.add_subcommand("compare", "run cells and rank them by FEV to a target value");
  auto* sweep_cmd = app.add_subcommand("sweep", "rule grid per strategy with a best-cell pointer");
  for (auto* cmd : {run_cmd, compare_cmd, sweep_cmd}) add_common(*cmd, flags);
  add_target(*compare_cmd, flags);
  add_target(*sweep_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const bool sweep = sweep_cmd->parsed();
    const ansps::ExperimentSpec spec = build_spec(flags, sweep);
    if (run_cmd->parsed()) {
      for (const auto& res : ansps::cmd_run(spec)) std::cout << res.csv.string() << '\n';
    } else {
      const ansps::Summary summary = sweep ? ansps::cmd_sweep(spec) : ansps::cmd_compare(spec);
      ansps::print_summary(std::cout, summary);
      if (sweep) {
        for (auto st : spec.strategies) {
          if (const auto* best = summary.best(st))
            std::cout << "best[" << ansps::to_string(st) << "] = " << best->cell.name() << '\n';
        }
      }
      std::cout << "summary: " << (spec.out_dir / "summary.csv").string() << '\n';
    }
  } catch (const ansps::ContractViolation& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ansps::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const ansps::NumericAbort& e) {
    std::cerr << "numeric abort: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
