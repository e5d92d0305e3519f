#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dirac_rm/errors.hpp"
#include "dirac_rm/hyp2f1.hpp"

using namespace dirac_rm;

namespace {

// Reference values from 30-digit arbitrary precision.
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kQuarterPi = 0.78539816339744830962;

cplx direct_sum(cplx a, cplx b, cplx c, double x, int terms) {
  cplx sum = 1.0;
  cplx term = 1.0;
  for (int k = 0; k < terms; ++k) {
    term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * (k + 1.0)) * x;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST(Hyp2F1, ZeroArgumentIsOne) {
  EXPECT_EQ(hyp2f1({2.5, cplx(1, 2), 0.7, 0.0}), cplx(1.0, 0.0));
}

TEST(Hyp2F1, TerminatesForMinusOne) {
  for (double x : {-0.1, -0.6, -1.0, -3.0}) {
    const cplx b{1.3, -0.4};
    const cplx c{2.1, 0.5};
    const cplx got = hyp2f1({-1.0, b, c, x});
    EXPECT_LT(std::abs(got - (1.0 - b * x / c)), 1e-14 * std::max(1.0, std::abs(got)));
  }
}

TEST(Hyp2F1, LogIdentityAtMinusOne) {
  EXPECT_NEAR(hyp2f1({1.0, 1.0, 2.0, -1.0}).real(), kLn2, 1e-12);
  // Independent cross-check by brute summation of the alternating series.
  const cplx brute = direct_sum(1.0, 1.0, 2.0, -1.0, 10000);
  EXPECT_NEAR(brute.real(), kLn2, 1e-4);
}

TEST(Hyp2F1, GaussValueAtMinusOne) {
  // 2F1(a, b; 1 + a - b; -1) with (a, b) = (1, 1/2) is pi/4.
  EXPECT_NEAR(hyp2f1({1.0, 0.5, 1.5, -1.0}).real(), kQuarterPi, 1e-12);
}

TEST(Hyp2F1, PoleInC) {
  EXPECT_THROW(hyp2f1({1.0, 1.0, 0.0, -0.2}), PoleInC);
  EXPECT_THROW(hyp2f1({1.0, 1.0, -3.0, -0.7}), PoleInC);
  EXPECT_NO_THROW(hyp2f1({1.0, 1.0, cplx(-3.0, 1e-3), -0.2}));
}

TEST(Hyp2F1, PositiveArgumentRejected) {
  EXPECT_THROW(hyp2f1({1.0, 1.0, 2.0, 0.3}), InvalidArgument);
}

TEST(Hyp2F1, SymmetryInUpperParameters) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const cplx a{3 * u(rng), u(rng)};
    const cplx b{3 * u(rng), u(rng)};
    const cplx c{2.5 + 2 * u(rng), u(rng)};
    const double x = -0.5 * (1.0 + u(rng));
    const cplx ab = hyp2f1({a, b, c, x});
    const cplx ba = hyp2f1({b, a, c, x});
    EXPECT_LE(std::abs(ab - ba), 1e-12 * std::max(1.0, std::abs(ab)));
  }
}

TEST(Hyp2F1, PfaffMatchesDirectSeries) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const cplx a{-3 + 6 * u(rng), u(rng)};
    const cplx b{-3 + 6 * u(rng), u(rng)};
    const cplx c{0.5 + 3 * u(rng), u(rng)};
    const double x = -0.5 + 0.2 * u(rng);
    const cplx d = detail::hyp2f1_series(a, b, c, x).value;
    const cplx p = detail::hyp2f1_pfaff(a, b, c, x).value;
    EXPECT_LE(std::abs(d - p), 1e-12 * std::max(1.0, std::abs(d)));
  }
}

TEST(Hyp2F1, DerivativeSimpleCases) {
  const cplx b{2.0, 0.3};
  const cplx c{1.5, -0.2};
  EXPECT_LT(std::abs(hyp2f1_derivative({-1.0, b, c, -0.4}) + b / c), 1e-15);
  const cplx a{0.7, 0.1};
  EXPECT_LT(std::abs(hyp2f1_derivative({a, b, c, 0.0}) - a * b / c), 1e-15);
}

TEST(Hyp2F1, DerivativeMatchesFiniteDifference) {
  const double x = -0.5;
  const double h = 1e-6;
  const cplx fd = (hyp2f1({1.0, 1.0, 2.0, x + h}) - hyp2f1({1.0, 1.0, 2.0, x - h})) / (2 * h);
  EXPECT_LE(std::abs(hyp2f1_derivative({1.0, 1.0, 2.0, x}) - fd), 1e-8);
}

TEST(Hyp2F1, DerivativeRandomSamples) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double a = -10 + 20 * u(rng);
    const double b = -10 + 20 * u(rng);
    const double c = 1 + 9 * u(rng);
    const double x = -0.9 + 0.8 * u(rng);
    const double h = 1e-3;
    auto f = [&](double t) { return hyp2f1({a, b, c, t}); };
    const cplx fd = (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12 * h);
    const cplx d = hyp2f1_derivative({a, b, c, x});
    EXPECT_LE(std::abs(d - fd), 1e-7 * std::max(std::abs(d), std::abs(f(x))));
  }
}

TEST(Hyp2F1, ContinuationFlagged) {
  const auto inside = hyp2f1_detailed({-2.0, 1.5, 2.5, -0.8});
  EXPECT_FALSE(inside.continued);
  const auto outside = hyp2f1_detailed({-2.0, 1.5, 2.5, -4.0});
  EXPECT_TRUE(outside.continued);
  EXPECT_LT(std::abs(outside.value - direct_sum(-2.0, 1.5, 2.5, -4.0, 3)), 1e-12);
}

TEST(Hyp2F1, HopelessContinuationFailsFast) {
  EXPECT_THROW(hyp2f1({5.0, 2.0, 3.5, -1e12}), NoConvergence);
}
