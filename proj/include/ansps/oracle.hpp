#ifndef ANSPS_ORACLE_HPP
#define ANSPS_ORACLE_HPP

#include <cstdint>

#include "ansps/types.hpp"

namespace ansps {

struct ValueAndSubgradient {
  double value;
  Vector subgradient;
};

/// Sample average approximation f_I(x) = (1/|I|) sum_{i in I} f_i(x) of a
/// convex finite-sum objective.
///
/// Results are deterministic functions of (x, I). Implementations count the
/// data scalar products they perform (FEV); that counter is the only
/// observable state and is owned by one solver run.
class SaaOracle {
 public:
  virtual ~SaaOracle() = default;

  virtual std::size_t dimension() const = 0;
  virtual std::size_t sample_count() const = 0;

  virtual double value(const Vector& x, IndexSpan indices) = 0;
  virtual Vector subgradient(const Vector& x, IndexSpan indices) = 0;
  virtual ValueAndSubgradient value_and_subgradient(const Vector& x, IndexSpan indices) = 0;

  /// Cumulative scalar products charged so far.
  virtual std::uint64_t fev() const = 0;
};

}  // namespace ansps

#endif
