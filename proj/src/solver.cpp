#include "ansps/solver.hpp"

#include <cmath>
#include <random>

#include "ansps/linesearch.hpp"

namespace ansps {

namespace {

// Stream offset keeping the starting point independent of the permutation draw.
constexpr std::uint64_t kStartStream = 0x9E3779B97F4A7C15ULL;

SampleSchedule make_schedule(const SaaOracle& oracle, const SolverConfig& c) {
  c.validate();
  SampleSchedule::Options o;
  o.strategy = c.strategy;
  o.growth = c.r;
  o.initial = c.initial_sample_size(oracle.sample_count());
  o.fresh_on_increase = c.fresh_on_increase;
  return SampleSchedule(oracle.sample_count(), o, c.seed);
}

SpectralState make_spectral(const SolverConfig& c) {
  SpectralState::Options o;
  o.rule = c.spectral;
  o.zeta_lo = c.zeta_lo;
  o.zeta_hi = c.zeta_hi;
  o.zeta_0 = c.zeta_0;
  o.constant = c.zeta_0;
  return SpectralState(o);
}

}  // namespace

void SolverConfig::validate() const {
  if (!(c2 > 0.0)) throw ContractViolation("C2 must be positive");
  if (!(eta > 0.0)) throw ContractViolation("eta must be positive");
  if (m == 0) throw ContractViolation("m must be at least 1");
  if (!(zeta_lo > 0.0 && zeta_lo <= zeta_0 && zeta_0 <= zeta_hi && std::isfinite(zeta_hi)))
    throw ContractViolation("need 0 < zeta_lo <= zeta_0 <= zeta_hi < inf");
  if (!(r > 1.0)) throw ContractViolation("r must exceed 1");
  if (!n0 && !(n0_frac > 0.0 && n0_frac <= 1.0)) throw ContractViolation("n0 fraction must lie in (0, 1]");
  if (n0 && *n0 == 0) throw ContractViolation("N_0 must be at least 1");
}

std::size_t SolverConfig::initial_sample_size(std::size_t n_max) const {
  std::size_t n = n0 ? *n0 : ceil_size(n0_frac * static_cast<double>(n_max));
  if (n > n_max) throw ContractViolation("N_0 exceeds the full sample");
  return std::max<std::size_t>(n, 1);
}

Vector initial_point(const FeasibleRegion& region, std::size_t n, const SolverConfig& config) {
  const auto dim = static_cast<Eigen::Index>(n);
  switch (config.start) {
    case StartMode::Given:
      if (config.x0.size() != dim) throw ContractViolation("given x0 has the wrong dimension");
      return project(region, config.x0);
    case StartMode::ZeroProjected:
      return project(region, Vector::Zero(dim));
    case StartMode::RandomInRegion:
      break;
  }

  std::mt19937_64 rng(config.seed ^ kStartStream);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vector x(dim);
  if (const auto* ball = std::get_if<L2Ball>(&region.shape())) {
    for (auto& c : x) c = gauss(rng);
    const double norm = x.norm();
    if (norm == 0.0) return Vector::Zero(dim);
    const double radius = ball->radius * std::pow(unif(rng), 1.0 / static_cast<double>(n));
    return project(region, x * (radius / norm));
  }
  if (const auto* box = std::get_if<Box>(&region.shape())) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double lo = box->lo[i], hi = box->hi[i];
      x[i] = std::isfinite(lo) && std::isfinite(hi) ? lo + (hi - lo) * unif(rng) : gauss(rng);
    }
    return project(region, x);
  }
  if (region.is<Nonnegative>()) {
    for (auto& c : x) c = std::abs(gauss(rng));
    return x;
  }
  for (auto& c : x) c = gauss(rng);
  return x;
}

AnspsSolver::AnspsSolver(SaaOracle& oracle, FeasibleRegion region, const SolverConfig& config,
                         FullObjective full_objective)
    : oracle_(oracle),
      region_(std::move(region)),
      config_(config),
      full_(std::move(full_objective)),
      schedule_(make_schedule(oracle, config)),
      spectral_(make_spectral(config)),
      x_(initial_point(region_, oracle.dimension(), config)),
      nonmono_(NonmonotoneState::Options{config.nonmonotone, 6, 0.85},
               oracle.value(x_, schedule_.current_indices())) {
  if (!std::isfinite(nonmono_.current())) abort("non-finite objective at x_0");
}

void AnspsSolver::abort(const std::string& what) {
  throw NumericAbort(what + " at iteration " + std::to_string(k_), trace_);
}

double AnspsSolver::sampled_full(std::uint64_t k, bool force) {
  if (!full_) return std::nan("");
  if (force || (config_.full_stride > 0 && k % config_.full_stride == 0)) return full_(x_);
  return std::nan("");
}

void AnspsSolver::step() {
  if (finished_) throw ContractViolation("solver already finished");

  TraceRow row;
  row.k = k_;
  row.n_k = schedule_.size();
  row.zeta_k = spectral_.current();
  row.fev_cum = oracle_.fev();
  row.f_saa = nonmono_.current();
  row.f_full = sampled_full(k_, false);

  StepRecord rec;
  rec.k = k_;
  rec.fev_before = oracle_.fev();
  rec.reference_value = nonmono_.reference_value();
  rec.h_k = schedule_.error_measure();

  const IndexSpan sample = schedule_.current_indices();

  // S1: scaled subgradient direction.
  const Vector g_bar = oracle_.subgradient(x_, sample);
  if (!g_bar.allFinite()) abort("non-finite subgradient");
  const ScaledSubgradient scaled = scale_subgradient(g_bar);
  const Vector p = search_direction(spectral_.current(), scaled.v);
  rec.q = scaled.q;
  rec.v_norm = scaled.v.norm();
  rec.p_norm = p.norm();

  // S2: step size.
  double alpha = 1.0;
  if (k_ > 0) {
    rec.alpha_bar = step_upper_bound(k_, config_.c2);
    const auto candidates = candidate_steps(k_, config_.c2, config_.m);
    auto f = [&](const Vector& y) { return oracle_.value(y, sample); };
    LineSearchResult ls = line_search(f, x_, p, rec.reference_value, config_.eta, candidates, k_);
    alpha = ls.alpha;
    rec.accepted = ls.accepted;
    rec.tried_alphas = std::move(ls.tried_alphas);
    rec.tried_values = std::move(ls.tried_values);
  }

  // S3: projected update.
  Vector x_next = project(region_, trial_point(x_, alpha, p));
  if (!x_next.allFinite()) abort("non-finite iterate");
  const double theta = (x_next - x_).norm();

  // S4: spectral coefficient from a same-sample subgradient difference.
  const Vector g_tilde = oracle_.subgradient(x_next, sample);
  if (!g_tilde.allFinite()) abort("non-finite subgradient");
  const DifferencePair sy = pair_differences(x_, x_next, g_bar, g_tilde);
  spectral_.update(sy.s, sy.y);

  // S5: sample size.
  const std::size_t n_next = next_sample_size(schedule_, theta);
  schedule_.advance(n_next);

  // S6: reference value on the new sample.
  x_ = std::move(x_next);
  const double f_next = oracle_.value(x_, schedule_.current_indices());
  if (!std::isfinite(f_next)) abort("non-finite objective value");
  nonmono_.advance(f_next);

  row.alpha_k = alpha;
  row.theta_k = theta;
  rec.n_next = n_next;
  rec.fev_after = oracle_.fev();
  trace_.rows.push_back(row);
  trace_.steps.push_back(std::move(rec));

  // S7
  ++k_;
}

const RunTrace& AnspsSolver::finish() {
  if (!finished_) {
    TraceRow row;
    row.k = k_;
    row.n_k = schedule_.size();
    row.alpha_k = std::nan("");
    row.zeta_k = spectral_.current();
    row.theta_k = std::nan("");
    row.fev_cum = oracle_.fev();
    row.f_saa = nonmono_.current();
    row.f_full = sampled_full(k_, true);
    trace_.rows.push_back(row);
    finished_ = true;
  }
  return trace_;
}

RunTrace run(const SolverConfig& config, const HingeProblem& problem) {
  HingeOracle oracle(problem);
  AnspsSolver solver(oracle, problem.region, config,
                     [&problem](const Vector& x) { return full_objective(problem, x); });
  while (solver.iteration() < config.max_iterations && solver.fev() < config.fev_budget) solver.step();
  return solver.finish();
}

ComplexityReport complexity_report(const RunTrace& trace, const SolverConfig& config, std::size_t n_max) {
  const auto n = static_cast<double>(n_max);
  const auto n0 = static_cast<double>(config.initial_sample_size(n_max));
  const double inner = std::ceil(config.c2 * config.zeta_hi * n) + 1.0;
  ComplexityReport rep;
  rep.k_bar = inner * std::log(n / n0) / std::log(config.r);
  rep.observed = trace.full_sample_iteration(n_max);
  return rep;
}

}  // namespace ansps
