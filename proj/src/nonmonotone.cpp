#include "ansps/nonmonotone.hpp"

#include <algorithm>
#include <cmath>

#include "ansps/types.hpp"

namespace ansps {

std::string to_string(NonmonotoneRule r) {
  switch (r) {
    case NonmonotoneRule::Max: return "max";
    case NonmonotoneRule::CCA: return "cca";
    case NonmonotoneRule::Mon: return "mon";
    case NonmonotoneRule::ADA: return "ada";
  }
  return "?";
}

NonmonotoneRule parse_nonmonotone_rule(const std::string& name) {
  if (name == "max") return NonmonotoneRule::Max;
  if (name == "cca") return NonmonotoneRule::CCA;
  if (name == "mon") return NonmonotoneRule::Mon;
  if (name == "ada") return NonmonotoneRule::ADA;
  throw ContractViolation("unknown nonmonotone rule '" + name + "'");
}

NonmonotoneState::NonmonotoneState(const Options& options, double f0)
    : options_(options), f_current_(f0), cca_d_(f0) {
  if (options.window == 0) throw ContractViolation("MAX window must hold at least one value");
  if (!(options.cca_eta >= 0.0 && options.cca_eta <= 1.0)) throw ContractViolation("CCA eta must lie in [0, 1]");
  window_.push_back(f0);
}

void NonmonotoneState::advance(double f_next) {
  ++k_;
  // The MAX window starts at i = 1, so f_0 leaves it on the first step.
  if (k_ == 1) window_.clear();
  window_.push_back(f_next);
  while (window_.size() > options_.window) window_.pop_front();

  const double weight_next = options_.cca_eta * cca_weight_ + 1.0;
  cca_d_ = (options_.cca_eta * cca_weight_ * cca_d_ + f_next) / weight_next;
  cca_weight_ = weight_next;

  f_current_ = f_next;
}

double NonmonotoneState::reference_value() const {
  switch (options_.rule) {
    case NonmonotoneRule::Max:
      return *std::max_element(window_.begin(), window_.end());
    case NonmonotoneRule::CCA:
      return std::max(f_current_, cca_d_);
    case NonmonotoneRule::Mon:
      return f_current_;
    case NonmonotoneRule::ADA: {
      const int e = k_ > 2000 ? 2000 : static_cast<int>(k_);
      return f_current_ + std::ldexp(1.0, -e);
    }
  }
  return f_current_;
}

}  // namespace ansps
