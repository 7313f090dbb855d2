#include "ansps/region.hpp"

#include <cmath>
#include <sstream>

namespace ansps {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

FeasibleRegion FeasibleRegion::ball(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw ContractViolation("L2 ball radius must be positive and finite");
  return FeasibleRegion(L2Ball{radius});
}

FeasibleRegion FeasibleRegion::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size())
    throw ContractViolation("box bounds have different dimensions");
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (std::isnan(lo[i]) || std::isnan(hi[i]) || lo[i] > hi[i])
      throw ContractViolation("box requires lo <= hi componentwise");
  }
  return FeasibleRegion(Box{std::move(lo), std::move(hi)});
}

FeasibleRegion FeasibleRegion::nonnegative() { return FeasibleRegion(Nonnegative{}); }

FeasibleRegion FeasibleRegion::whole_space() { return FeasibleRegion(WholeSpace{}); }

std::string FeasibleRegion::describe() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const L2Ball& b) { os << "ball(r=" << b.radius << ")"; },
                 [&](const Box& b) { os << "box(n=" << b.lo.size() << ")"; },
                 [&](const Nonnegative&) { os << "nonnegative"; },
                 [&](const WholeSpace&) { os << "whole-space"; },
             },
             shape_);
  return os.str();
}

Vector project(const FeasibleRegion& region, const Vector& x) {
  if (!x.allFinite()) throw ContractViolation("cannot project a non-finite point");
  return std::visit(
      Overloaded{
          [&](const L2Ball& b) -> Vector {
            const double norm = x.norm();
            if (norm <= b.radius) return x;
            return x * (b.radius / norm);
          },
          [&](const Box& b) -> Vector {
            if (b.lo.size() != x.size())
              throw ContractViolation("point dimension does not match box dimension");
            return x.cwiseMax(b.lo).cwiseMin(b.hi);
          },
          [&](const Nonnegative&) -> Vector { return x.cwiseMax(0.0); },
          [&](const WholeSpace&) -> Vector { return x; },
      },
      region.shape());
}

double distance_to_region(const FeasibleRegion& region, const Vector& x) {
  return (x - project(region, x)).norm();
}

}  // namespace ansps
