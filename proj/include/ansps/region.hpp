#ifndef ANSPS_REGION_HPP
#define ANSPS_REGION_HPP

#include <string>
#include <variant>

#include "ansps/types.hpp"

namespace ansps {

struct L2Ball {
  double radius;
};

struct Box {
  Vector lo;
  Vector hi;
};

struct Nonnegative {};

struct WholeSpace {};

/// Closed convex feasible set with an exact Euclidean projection.
///
/// Only the four variants below are admitted, so every region is closed and
/// convex by construction. Construction goes through the named factories,
/// which validate the parameters (radius > 0, lo <= hi componentwise).
class FeasibleRegion {
 public:
  using Variant = std::variant<L2Ball, Box, Nonnegative, WholeSpace>;

  static FeasibleRegion ball(double radius);
  static FeasibleRegion box(Vector lo, Vector hi);
  static FeasibleRegion nonnegative();
  static FeasibleRegion whole_space();

  const Variant& shape() const { return shape_; }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(shape_);
  }

  std::string describe() const;

 private:
  explicit FeasibleRegion(Variant v) : shape_(std::move(v)) {}
  Variant shape_;
};

/// Euclidean projection onto `region`. Throws ContractViolation on a
/// dimension mismatch (box regions) or non-finite input.
Vector project(const FeasibleRegion& region, const Vector& x);

/// ||x - project(region, x)||.
double distance_to_region(const FeasibleRegion& region, const Vector& x);

}  // namespace ansps

#endif
