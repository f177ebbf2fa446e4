// Sanity checks of the test-only oracles themselves.

#include <gtest/gtest.h>

#include <cmath>

#include "quadratic.hpp"

using oracle::QuadraticNumber;

TEST(QuadraticOracle, FloorAndSign) {
  const auto phi = QuadraticNumber::surd(1, 5, 2);
  EXPECT_EQ(phi.floor(), 1);
  EXPECT_EQ(phi.times(10).floor(), 16);
  EXPECT_EQ(phi.times(-10).floor(), -17);
  EXPECT_EQ(QuadraticNumber::surd(-7, 2, 3).floor(), -2);  // (-7 + 1.414)/3 = -1.86
  EXPECT_EQ(QuadraticNumber::surd(1, 5, -2).floor(), -2);
  EXPECT_EQ(phi.sign(), 1);
  EXPECT_EQ(QuadraticNumber::sign_of(-3, 1, 5), -1);
  EXPECT_EQ(QuadraticNumber::sign_of(3, -1, 5), 1);
  EXPECT_EQ(QuadraticNumber::sign_of(-2, 1, 5), 1);
}

TEST(QuadraticOracle, DistAndFrac) {
  const auto phi = QuadraticNumber::surd(1, 5, 2);
  EXPECT_NEAR(phi.dist_nearest().to_double(), 0.3819660112501051, 1e-15);
  EXPECT_NEAR(phi.times(2).frac().to_double(), 0.2360679774997897, 1e-15);
  EXPECT_NEAR(phi.plus(mpq_class(1, 2)).dist_nearest().to_double(), 0.1180339887498949, 1e-15);
  for (int n = 1; n < 2000; ++n) {
    const double x = n * (1 + std::sqrt(5.0)) / 2;
    EXPECT_NEAR(phi.times(n).frac().to_double(), x - std::floor(x), 1e-11);
  }
}

TEST(QuadraticOracle, CompareWithRational) {
  const auto s2 = QuadraticNumber::surd(0, 2, 1);
  EXPECT_EQ(s2.compare(mpq_class(141421, 100000)), 1);
  EXPECT_EQ(s2.compare(mpq_class(141422, 100000)), -1);
  EXPECT_EQ(s2.compare(mpq_class(-5)), 1);
}
