#ifndef ANSPS_TYPES_HPP
#define ANSPS_TYPES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ansps {

using Vector = Eigen::VectorXd;

/// Read-only view of sample indices (a realization of the sample set).
using IndexSpan = std::span<const std::size_t>;

/// A caller broke a documented precondition (dimension mismatch, empty
/// index set, non-finite input, invalid parameter).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline bool all_finite(const Vector& x) { return x.allFinite(); }

}  // namespace ansps

#endif
