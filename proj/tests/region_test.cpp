#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ansps/region.hpp"
#include "test_support.hpp"

using ansps::FeasibleRegion;
using ansps::Vector;

namespace {

Vector v(std::initializer_list<double> xs) {
  Vector out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) out[i++] = x;
  return out;
}

}  // namespace

TEST(Project, BallScalesExteriorPoint) {
  const Vector p = ansps::project(FeasibleRegion::ball(1.0), v({3, 4}));
  EXPECT_NEAR(p[0], 0.6, 1e-15);
  EXPECT_NEAR(p[1], 0.8, 1e-15);
}

TEST(Project, BallKeepsInteriorPoint) {
  EXPECT_EQ(ansps::project(FeasibleRegion::ball(1.0), v({0.3, 0.4})), v({0.3, 0.4}));
}

TEST(Project, BoxClamps) {
  EXPECT_EQ(ansps::project(FeasibleRegion::box(v({0, 0}), v({1, 1})), v({-2, 0.5})), v({0, 0.5}));
}

TEST(Project, NonnegativeClipsAtZero) {
  EXPECT_EQ(ansps::project(FeasibleRegion::nonnegative(), v({-1, 2, -0.5})), v({0, 2, 0}));
}

TEST(Project, WholeSpaceIsIdentity) {
  EXPECT_EQ(ansps::project(FeasibleRegion::whole_space(), v({-7, 1e6})), v({-7, 1e6}));
}

TEST(Distance, Examples) {
  EXPECT_DOUBLE_EQ(ansps::distance_to_region(FeasibleRegion::ball(1.0), v({3, 4})), 4.0);
  EXPECT_EQ(ansps::distance_to_region(FeasibleRegion::ball(1.0), v({0.1, 0.2})), 0.0);
  EXPECT_DOUBLE_EQ(ansps::distance_to_region(FeasibleRegion::box(v({0}), v({1})), v({2})), 1.0);
}

TEST(Region, RejectsInvalidParameters) {
  EXPECT_THROW(FeasibleRegion::ball(0.0), ansps::ContractViolation);
  EXPECT_THROW(FeasibleRegion::ball(-1.0), ansps::ContractViolation);
  EXPECT_THROW(FeasibleRegion::box(v({0, 2}), v({1, 1})), ansps::ContractViolation);
  EXPECT_THROW(FeasibleRegion::box(v({0}), v({1, 1})), ansps::ContractViolation);
}

TEST(Project, RejectsBadInput) {
  const auto box = FeasibleRegion::box(v({0, 0}), v({1, 1}));
  EXPECT_THROW(ansps::project(box, v({1, 2, 3})), ansps::ContractViolation);
  EXPECT_THROW(ansps::project(FeasibleRegion::ball(1.0), v({std::nan(""), 0})), ansps::ContractViolation);
  EXPECT_THROW(ansps::project(FeasibleRegion::nonnegative(), v({std::numeric_limits<double>::infinity()})),
               ansps::ContractViolation);
}

TEST(ProjectProperty, IdempotentNonexpansiveFeasible) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = dim(rng);
    const FeasibleRegion region = ansps::testkit::random_region(rng, n);
    const Vector x = ansps::testkit::random_vector(rng, n, 3.0);
    const Vector y = ansps::testkit::random_vector(rng, n, 3.0);
    const Vector px = ansps::project(region, x);
    const Vector py = ansps::project(region, y);
    ASSERT_LE((ansps::project(region, px) - px).norm(), 1e-12) << region.describe();
    ASSERT_LE((px - py).norm(), (x - y).norm() + 1e-12) << region.describe();
    ASSERT_LE(ansps::distance_to_region(region, px), 1e-12) << region.describe();
  }
}
