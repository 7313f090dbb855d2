#ifndef ANSPS_TRACE_HPP
#define ANSPS_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ansps {

/// One CSV row of a run. Row k describes iterate x_k and the step taken
/// from it; the terminal row has no step, so alpha_k and theta_k are NaN.
/// f_full is NaN on rows where the diagnostic was not sampled.
struct TraceRow {
  std::uint64_t k = 0;
  std::uint64_t n_k = 0;
  double alpha_k = 0.0;
  double zeta_k = 0.0;
  double theta_k = 0.0;
  std::uint64_t fev_cum = 0;
  double f_saa = 0.0;
  double f_full = 0.0;
};

/// In-memory per-step quantities that are not part of the CSV schema but are
/// needed to re-check the solver invariants from a finished run.
struct StepRecord {
  std::uint64_t k = 0;
  double reference_value = 0.0;   // F_k
  double q = 1.0;                 // q_k
  double v_norm = 0.0;            // ||v_k||
  double p_norm = 0.0;            // ||p_k||
  double alpha_bar = 1.0;         // upper end of the step interval
  std::optional<std::size_t> accepted;  // candidate index, none on fallback / k = 0
  std::vector<double> tried_alphas;     // line-search trials, largest first
  std::vector<double> tried_values;
  std::uint64_t fev_before = 0;
  std::uint64_t fev_after = 0;
  std::uint64_t n_next = 0;
  double h_k = 0.0;               // SAA error measure at N_k
};

struct RunTrace {
  std::vector<TraceRow> rows;
  std::vector<StepRecord> steps;

  std::optional<std::uint64_t> full_sample_iteration(std::uint64_t n_max) const;
};

inline constexpr const char* kTraceHeader = "k,N_k,alpha_k,zeta_k,theta_k,fev_cum,f_saa,f_full";

/// Writes the header and one line per row; reals use 17 significant digits so
/// the text parses back to the identical doubles.
void write_trace_csv(std::ostream& os, const RunTrace& trace);
std::string trace_csv(const RunTrace& trace);

/// Parses text produced by write_trace_csv. Throws ParseError.
std::vector<TraceRow> parse_trace_csv(std::istream& is);

}  // namespace ansps

#endif
