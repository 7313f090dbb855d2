#include "ansps/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace ansps {

std::string to_string(SpectralRule r) {
  switch (r) {
    case SpectralRule::BB1: return "bb1";
    case SpectralRule::BB2: return "bb2";
    case SpectralRule::ABB: return "abb";
    case SpectralRule::ABBmin: return "abbmin";
    case SpectralRule::Constant: return "const";
  }
  return "?";
}

SpectralRule parse_spectral_rule(const std::string& name) {
  if (name == "bb1") return SpectralRule::BB1;
  if (name == "bb2") return SpectralRule::BB2;
  if (name == "abb") return SpectralRule::ABB;
  if (name == "abbmin") return SpectralRule::ABBmin;
  if (name == "const") return SpectralRule::Constant;
  throw ContractViolation("unknown spectral rule '" + name + "'");
}

ScaledSubgradient scale_subgradient(const Vector& g) {
  if (!g.allFinite()) throw ContractViolation("non-finite subgradient");
  const double q = std::max(1.0, g.norm());
  return {q, g / q};
}

RawBB raw_bb(const Vector& s, const Vector& y) {
  if (s.size() != y.size()) throw ContractViolation("s and y differ in dimension");
  const double eps = 1e-12 * s.norm() * y.norm() + 1e-300;
  const double sy = s.dot(y);
  const double yy = y.squaredNorm();
  RawBB out;
  if (sy > eps) out.bb1 = s.squaredNorm() / sy;
  if (yy > eps) out.bb2 = sy / yy;
  return out;
}

Vector search_direction(double zeta, const Vector& v) { return -zeta * v; }

DifferencePair pair_differences(const Vector& x_prev, const Vector& x_next, const Vector& g_bar_prev,
                                 const Vector& g_tilde) {
  if (x_prev.size() != x_next.size() || g_bar_prev.size() != g_tilde.size() || x_prev.size() != g_tilde.size())
    throw ContractViolation("difference pair dimensions do not match");
  return {x_next - x_prev, g_tilde - g_bar_prev};
}

SpectralState::SpectralState(const Options& options) : options_(options), zeta_(options.zeta_0) {
  if (!(options.zeta_lo > 0.0) || !(options.zeta_lo <= options.zeta_hi) || !std::isfinite(options.zeta_hi))
    throw ContractViolation("spectral bounds must satisfy 0 < zeta_lo <= zeta_hi < inf");
  if (!(options.zeta_0 >= options.zeta_lo && options.zeta_0 <= options.zeta_hi))
    throw ContractViolation("zeta_0 must lie inside the safeguard interval");
}

double SpectralState::clamp(double lambda) const {
  return std::min(options_.zeta_hi, std::max(options_.zeta_lo, lambda));
}

double SpectralState::update(const Vector& s, const Vector& y) {
  const RawBB bb = raw_bb(s, y);
  if (bb.bb2) {
    history_.push_back(*bb.bb2);
    while (history_.size() > options_.window + 1) history_.pop_front();
  }

  std::optional<double> lambda;
  switch (options_.rule) {
    case SpectralRule::BB1:
      lambda = bb.bb1;
      break;
    case SpectralRule::BB2:
      lambda = bb.bb2;
      break;
    case SpectralRule::ABB:
    case SpectralRule::ABBmin: {
      bool take_bb2 = false;
      if (bb.bb1 && bb.bb2) take_bb2 = *bb.bb2 / *bb.bb1 < options_.switch_threshold;
      else take_bb2 = bb.bb2.has_value();
      if (!take_bb2) {
        lambda = bb.bb1;
      } else if (options_.rule == SpectralRule::ABB) {
        lambda = bb.bb2;
      } else {
        lambda = *std::min_element(history_.begin(), history_.end());
      }
      break;
    }
    case SpectralRule::Constant:
      lambda = options_.constant;
      break;
  }

  // A nonpositive BB2 (s'y <= 0 with y'y > 0) is still a defined ratio; the
  // safeguard maps it to zeta_lo.
  if (lambda) zeta_ = clamp(*lambda);
  return zeta_;
}

}  // namespace ansps
