#ifndef ANSPS_SPECTRAL_HPP
#define ANSPS_SPECTRAL_HPP

#include <deque>
#include <optional>
#include <string>

#include "ansps/types.hpp"

namespace ansps {

enum class SpectralRule { BB1, BB2, ABB, ABBmin, Constant };

std::string to_string(SpectralRule r);
SpectralRule parse_spectral_rule(const std::string& name);  // bb1 | bb2 | abb | abbmin | const

struct ScaledSubgradient {
  double q;   // max{1, ||g||}
  Vector v;   // g / q, so ||v|| <= 1
};

ScaledSubgradient scale_subgradient(const Vector& g);

struct RawBB {
  std::optional<double> bb1;  // s's / s'y, none when s'y <= eps
  std::optional<double> bb2;  // y's / y'y, none when y'y <= eps
};

/// Both Barzilai-Borwein ratios with eps = 1e-12 ||s|| ||y|| + 1e-300 as the
/// degeneracy threshold for either denominator.
RawBB raw_bb(const Vector& s, const Vector& y);

/// p = -zeta v.
Vector search_direction(double zeta, const Vector& v);

struct DifferencePair {
  Vector s;
  Vector y;
};

/// s = x_next - x_prev and y = g_tilde - g_bar_prev, with both subgradients
/// taken on the same sample.
DifferencePair pair_differences(const Vector& x_prev, const Vector& x_next, const Vector& g_bar_prev,
                                 const Vector& g_tilde);

/// Safeguarded spectral coefficient engine.
///
/// ABB picks BB2 when BB2/BB1 < switch_threshold, BB1 otherwise; ABBmin
/// replaces the BB2 branch by the minimum of the last window+1 BB2 values.
/// When the quantities a rule needs are undefined the previous coefficient is
/// kept. The result is always clamped into [zeta_lo, zeta_hi].
class SpectralState {
 public:
  struct Options {
    SpectralRule rule = SpectralRule::BB1;
    double zeta_lo = 1e-4;
    double zeta_hi = 1e4;
    double zeta_0 = 1.0;
    double constant = 1.0;           // used by SpectralRule::Constant
    std::size_t window = 5;          // m_a
    double switch_threshold = 0.8;
  };

  explicit SpectralState(const Options& options);

  double current() const { return zeta_; }
  const Options& options() const { return options_; }
  const std::deque<double>& bb2_history() const { return history_; }

  double clamp(double lambda) const;

  /// Computes and stores zeta_{k+1} from the pair (s_k, y_k).
  double update(const Vector& s, const Vector& y);

 private:
  Options options_;
  double zeta_;
  std::deque<double> history_;
};

inline double spectral_coefficient(SpectralState& state, const Vector& s, const Vector& y) {
  return state.update(s, y);
}

}  // namespace ansps

#endif
