#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "contica/bvn.hpp"
#include "contica/quadrature.hpp"
#include "contica/rng.hpp"
#include "oracles.hpp"

using namespace contica;

namespace {
double phi_cdf(double t) { return static_cast<double>(oracle::normal_cdf_series(t)); }
}  // namespace

TEST(Bvn, IndependentOriginIsQuarter) { EXPECT_NEAR(bvn_cdf(0.0, 0.0, 0.0), 0.25, 1e-15); }

TEST(Bvn, OrthantArcsineIdentity) {
  for (double rho : {-0.99, -0.95, -0.4, 0.1, 0.4, 0.9, 0.95, 0.999}) {
    const double expected = 0.25 + std::asin(rho) / (2.0 * M_PI);
    EXPECT_NEAR(bvn_cdf(0.0, 0.0, rho), expected, 1e-10) << rho;
  }
  EXPECT_NEAR(bvn_cdf(0.0, 0.0, 0.4), 0.31549494, 1e-8);
}

TEST(Bvn, FarTailVanishes) {
  EXPECT_LE(bvn_cdf(0.3, -20.0, 0.5), 1e-12);
  EXPECT_LE(bvn_cdf(-20.0, 2.0, -0.7), 1e-12);
}

TEST(Bvn, InfiniteLimitsReduceToMarginals) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_NEAR(bvn_cdf(0.7, inf, 0.3), phi_cdf(0.7), 1e-14);
  EXPECT_NEAR(bvn_cdf(inf, -1.2, 0.3), phi_cdf(-1.2), 1e-14);
  EXPECT_EQ(bvn_cdf(-inf, 0.0, 0.3), 0.0);
}

TEST(Bvn, RejectsDegenerateCorrelation) {
  EXPECT_THROW(bvn_cdf(0.0, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(bvn_cdf(0.0, 0.0, -1.0), std::invalid_argument);
  EXPECT_THROW(bvn_cdf(0.0, 0.0, std::nan("")), std::invalid_argument);
}

TEST(Bvn, MatchesConditionalQuadratureOracle) {
  RngStream rng(2024, {1});
  for (int i = 0; i < 60; ++i) {
    const double h = -4.0 + 8.0 * rng.uniform();
    const double k = -4.0 + 8.0 * rng.uniform();
    // Half the cases land in the high-correlation branch.
    const double rho = (i % 2 == 0) ? -0.9 + 1.8 * rng.uniform()
                                    : (rng.uniform() < 0.5 ? -1.0 : 1.0) * (0.93 + 0.065 * rng.uniform());
    EXPECT_NEAR(bvn_cdf(h, k, rho), oracle::bvn_conditional_quadrature(h, k, rho), 1e-10)
        << h << " " << k << " " << rho;
  }
}

TEST(Bvn, SymmetricInArguments) {
  RngStream rng(5, {});
  for (int i = 0; i < 50; ++i) {
    const double h = -3 + 6 * rng.uniform(), k = -3 + 6 * rng.uniform(), r = -0.98 + 1.96 * rng.uniform();
    EXPECT_NEAR(bvn_cdf(h, k, r), bvn_cdf(k, h, r), 1e-14);
  }
}

TEST(Quadrature, PolynomialIsExact) {
  const std::vector<double> bp{0.0, 1.0};
  const auto r = integrate_adaptive([](double x) { return std::pow(x, 20); }, bp, 1e-13, 100);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0 / 21.0, 1e-14);
}

TEST(Quadrature, KinkAtBreakpointCostsNothing) {
  const std::vector<double> bp{-1.0, 0.3, 2.0};
  const auto r = integrate_adaptive([](double x) { return std::abs(x - 0.3); }, bp, 1e-13, 100);
  EXPECT_NEAR(r.value, (1.3 * 1.3 + 1.7 * 1.7) / 2.0, 1e-13);
  EXPECT_EQ(r.subdivisions, 0);
}

TEST(Quadrature, KinkWithoutBreakpointIsRefined) {
  const std::vector<double> bp{-1.0, 2.0};
  const auto r = integrate_adaptive([](double x) { return std::abs(x - 0.3); }, bp, 1e-11, 500);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, (1.3 * 1.3 + 1.7 * 1.7) / 2.0, 1e-10);
  EXPECT_GT(r.subdivisions, 0);
}

TEST(Quadrature, LongExponentialTail) {
  const std::vector<double> bp{0.0, 40.0};
  const auto r = integrate_adaptive([](double x) { return std::exp(-x); }, bp, 1e-12, 500);
  EXPECT_NEAR(r.value, 1.0 - std::exp(-40.0), 1e-12);
}

TEST(Quadrature, JumpDiscontinuityStillConverges) {
  const std::vector<double> bp{0.0, 1.0};
  const auto r = integrate_adaptive([](double x) { return x < 1.0 / 3.0 ? 1.0 : 0.0; }, bp, 1e-9, 2000);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-9);
}

TEST(Quadrature, RejectsBadInput) {
  const std::vector<double> unsorted{1.0, 0.0};
  const std::vector<double> single{1.0};
  const std::vector<double> ok{0.0, 1.0};
  const auto f = [](double) { return 1.0; };
  EXPECT_THROW(integrate_adaptive(f, unsorted, 1e-10, 10), std::invalid_argument);
  EXPECT_EQ(integrate_adaptive(f, single, 1e-10, 10).value, 0.0);
  EXPECT_THROW(integrate_adaptive(f, ok, 0.0, 10), std::invalid_argument);
}
