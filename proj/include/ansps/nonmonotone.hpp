#ifndef ANSPS_NONMONOTONE_HPP
#define ANSPS_NONMONOTONE_HPP

#include <cstdint>
#include <deque>
#include <string>

namespace ansps {

enum class NonmonotoneRule { Max, CCA, Mon, ADA };

std::string to_string(NonmonotoneRule r);
NonmonotoneRule parse_nonmonotone_rule(const std::string& name);  // max | cca | mon | ada

/// Reference value F_k for the line search.
///
///   MAX: max of f_{N_i}(x_i) over i in [max{1, k-5}, k] (F_0 = f_0)
///   CCA: max{f_k, D_k}, D_{k+1} = (eta q_k D_k + f_{k+1}) / q_{k+1},
///        q_{k+1} = eta q_k + 1, D_0 = f_0, q_0 = 1
///   MON: f_k
///   ADA: f_k + 2^{-k}
///
/// Every rule returns a value >= f_k. The MAX window stores the SAA values as
/// produced, so it mixes sample sizes.
class NonmonotoneState {
 public:
  struct Options {
    NonmonotoneRule rule = NonmonotoneRule::ADA;
    std::size_t window = 6;
    double cca_eta = 0.85;
  };

  NonmonotoneState(const Options& options, double f0);

  /// Records f_{N_{k+1}}(x_{k+1}) and advances k.
  void advance(double f_next);

  double reference_value() const;

  std::uint64_t iteration() const { return k_; }
  double current() const { return f_current_; }
  double cca_d() const { return cca_d_; }
  double cca_weight() const { return cca_weight_; }
  const std::deque<double>& max_window() const { return window_; }

 private:
  Options options_;
  std::uint64_t k_ = 0;
  double f_current_;
  double cca_d_;
  double cca_weight_ = 1.0;
  std::deque<double> window_;
};

inline double reference_value(const NonmonotoneState& state) { return state.reference_value(); }

}  // namespace ansps

#endif
