#include <gtest/gtest.h>

#include <numbers>

#include "apoly/amalgam.hpp"
#include "apoly/numeric.hpp"
#include "apoly/parse.hpp"
#include "support/oracles.hpp"

namespace apoly {
namespace {

using Complex = std::complex<double>;

TEST(RootsDense, Quadratic) {
  const std::vector<double> a{2.0, -3.0, 1.0};  // (x - 1)(x - 2)
  const auto r = roots_dense(a);
  ASSERT_TRUE(r.converged);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_LT(testing::root_set_distance(r.roots, {1.0, 2.0}), 1e-12);
  EXPECT_EQ(r.residuals.size(), 2u);
  EXPECT_EQ(r.conditioning.size(), 2u);
}

TEST(RootsDense, ZeroRootsAreSplitOff) {
  const std::vector<double> a{0.0, 0.0, -1.0, 0.0, 1.0};  // x^2 (x^2 - 1)
  const auto r = roots_dense(a);
  ASSERT_TRUE(r.converged);
  EXPECT_LT(testing::root_set_distance(r.roots, {0.0, 0.0, 1.0, -1.0}), 1e-12);
  EXPECT_LT(testing::root_set_distance({0.0, 0.0, 1.0, -1.0}, r.roots), 1e-12);
}

TEST(RootsDense, RootsOfUnity) {
  for (int n = 1; n <= 24; ++n) {
    std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
    a.front() = -1.0;
    a.back() = 1.0;
    const auto r = roots_dense(a);
    ASSERT_TRUE(r.converged) << n;
    for (const auto& m : match_roots_of_unity(r.roots, n)) EXPECT_LT(m.distance, 1e-12) << n;
  }
}

TEST(RootsDense, WideDynamicRange) {
  // Roots 1e-6, 1, 1e6.
  const std::vector<double> a{-1.0, 1e6 + 1.0 + 1e-6, -(1e6 + 1.0 + 1e-6), 1.0};
  const auto r = roots_dense(a);
  ASSERT_TRUE(r.converged);
  for (double expected : {1e-6, 1.0, 1e6}) {
    double best = 1e300;
    for (const auto& z : r.roots) best = std::min(best, std::abs(z - expected) / expected);
    EXPECT_LT(best, 1e-9) << expected;
  }
}

TEST(RootsDense, SumOfRootsAndCompanionOracle) {
  testing::Rng rng(17);
  std::uniform_real_distribution<double> coeff(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = static_cast<std::size_t>(testing::uniform(rng, 1, 20));
    std::vector<double> a(d + 1);
    for (auto& x : a) x = coeff(rng);
    const auto r = roots_dense(a);
    ASSERT_TRUE(r.converged);
    ASSERT_EQ(r.roots.size(), d);
    Complex sum = 0.0;
    for (const auto& z : r.roots) sum += z;
    const double scale = 1.0 + std::abs(a[d - 1] / a[d]);
    EXPECT_LT(std::abs(sum + a[d - 1] / a[d]), 1e-8 * scale * static_cast<double>(d));
    const auto oracle = testing::companion_roots(a);
    EXPECT_LT(testing::root_set_distance(r.roots, oracle), 1e-6);
    EXPECT_LT(testing::root_set_distance(oracle, r.roots), 1e-6);
  }
}

TEST(RootsDense, BackwardErrorWithinTolerance) {
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0, 5.0};
  const auto r = roots_dense(a, 1e-12);
  ASSERT_TRUE(r.converged);
  for (std::size_t k = 0; k < r.roots.size(); ++k)
    EXPECT_LE(r.residuals[k], 1e-12 * r.conditioning[k]);
}

TEST(RootsDense, ImpossibleToleranceIsReported) {
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0, 5.0};
  const auto r = roots_dense(a, 0.0);
  EXPECT_EQ(r.roots.size(), 4u);
  EXPECT_FALSE(r.converged);
}

TEST(RootsDense, Errors) {
  EXPECT_THROW(roots_dense(std::vector<double>{1.0}), InvalidArgument);
  EXPECT_THROW(roots_dense(std::vector<double>{1.0, 0.0}), InvalidArgument);
  EXPECT_THROW(roots_dense(std::vector<double>{1.0, std::nan("")}), InvalidArgument);
}

TEST(RootsUnivariate, FromPolynomial) {
  const auto r = roots_univariate(parse_poly("t^3 - 6*t^2 + 11*t - 6"));
  ASSERT_TRUE(r.converged);
  EXPECT_LT(testing::root_set_distance(r.roots, {1.0, 2.0, 3.0}), 1e-10);
  EXPECT_THROW(roots_univariate(parse_poly("x + y")), InvalidArgument);
  EXPECT_THROW(roots_univariate(parse_poly("x^-1 + 1")), InvalidArgument);
  EXPECT_THROW(roots_univariate(parse_poly("3")), InvalidArgument);
}

TEST(MatchRootsOfUnity, GreedyDistinct) {
  const std::vector<Complex> roots{Complex(0.0, 1.01), Complex(-1.0, 0.0), Complex(0.99, 0.0),
                                   Complex(0.0, -1.0)};
  const auto m = match_roots_of_unity(roots, 4);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m[0].nearest, Complex(0.99, 0.0));
  EXPECT_NEAR(m[0].distance, 0.01, 1e-15);
  EXPECT_EQ(m[1].nearest, Complex(0.0, 1.01));
  EXPECT_EQ(m[2].nearest, Complex(-1.0, 0.0));
  EXPECT_EQ(m[3].nearest, Complex(0.0, -1.0));
  EXPECT_NEAR(m[1].xi.imag(), 1.0, 1e-15);
  EXPECT_THROW(match_roots_of_unity(roots, 0), InvalidArgument);
}

TEST(CoefficientsAt, Evaluates) {
  const auto f = parse_poly("3 + A*p^2 - 2*A^3*p");
  const auto c = coefficients_at(f, 0.5);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_DOUBLE_EQ(c[0], 3.0);
  EXPECT_DOUBLE_EQ(c[1], 0.25);
  EXPECT_DOUBLE_EQ(c[2], 0.0);
  EXPECT_DOUBLE_EQ(c[3], -1.0);
}

TEST(ConvergenceTrace, ApproachesRootsOfUnity) {
  for (Exponent n = 1; n <= 6; ++n) {
    const auto trace = convergence_trace(n, 1e-2, 0.1, 4);
    ASSERT_EQ(trace.steps.size(), 4u);
    for (const auto& step : trace.steps) {
      EXPECT_EQ(step.b, std::pow(step.p, static_cast<double>(n)));
      EXPECT_EQ(step.matched.size(), static_cast<std::size_t>(n));
    }
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      EXPECT_LT(trace.steps.back().matched[k].distance, 1e-3);
      EXPECT_LT(trace.steps[3].matched[k].distance, trace.steps[2].matched[k].distance);
    }
  }
}

TEST(ConvergenceTrace, Validation) {
  EXPECT_THROW(convergence_trace(0, 1e-2, 0.1, 4), InvalidArgument);
  EXPECT_THROW(convergence_trace(5, 0.5, 0.1, 4), InvalidArgument);
  EXPECT_THROW(convergence_trace(5, 1e-2, 1.0, 4), InvalidArgument);
  EXPECT_THROW(convergence_trace(5, 1e-2, 0.1, 1), InvalidArgument);
  EXPECT_THROW(convergence_trace(5, 1e-2, 0.1, 4, 0.0), NonConvergence);
}

}  // namespace
}  // namespace apoly
