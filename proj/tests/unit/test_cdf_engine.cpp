#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "contica/bvn.hpp"
#include "contica/cdf_engine.hpp"
#include "contica/rng.hpp"
#include "contica/tolerances.hpp"
#include "oracles.hpp"

using namespace contica;

namespace {

const ComponentLaw kNormal = ComponentLaw::normal();
const ComponentLaw kCExp = ComponentLaw::centered_exponential();
const ComponentLaw kExp = ComponentLaw::exponential();

MixingMatrix2 causal_a() { return MixingMatrix2::lower_causal(0.4); }

MixingMatrix2 random_matrix(RngStream& rng) {
  while (true) {
    MixingMatrix2 m(-1.5 + 3 * rng.uniform(), -1.5 + 3 * rng.uniform(), -1.5 + 3 * rng.uniform(),
                    -1.5 + 3 * rng.uniform());
    if (std::abs(m.determinant()) >= 0.2) return m;
  }
}

Point2 random_point(RngStream& rng, double r = 3.0) {
  return {-r + 2 * r * rng.uniform(), -r + 2 * r * rng.uniform()};
}

double mc_sigma(double p, std::uint64_t n) { return std::sqrt(std::max(p * (1 - p), 1e-12) / n); }

}  // namespace

TEST(PurePushforward, IdentityGaussianOrigin) {
  EXPECT_NEAR(pure_pushforward_cdf(MixingMatrix2::identity(), {kNormal, kNormal}, {0, 0}), 0.25, 1e-12);
}

TEST(PurePushforward, CausalGaussianOriginMatchesArcsine) {
  const double rho = 0.4;
  const double expected = 0.25 + std::asin(rho) / (2 * M_PI);
  EXPECT_NEAR(pure_pushforward_cdf(causal_a(), {kNormal, kNormal}, {0, 0}), expected, 1e-12);
  EXPECT_NEAR(expected, 0.31549494, 1e-8);
}

TEST(PurePushforward, IdentityFactorizes) {
  const auto id = MixingMatrix2::identity();
  const double e0 = 1.0 - std::exp(-1.0);
  EXPECT_NEAR(pure_pushforward_cdf(id, {kCExp, kCExp}, {0, 0}), e0 * e0, 1e-10);
  EXPECT_NEAR(pure_pushforward_cdf(id, {kNormal, kCExp}, {0, 0}), 0.5 * e0, 1e-10);
  EXPECT_NEAR(pure_pushforward_cdf(id, {kCExp, kNormal}, {0.4, -0.3}),
              kCExp.cdf(0.4) * kNormal.cdf(-0.3), 1e-10);
}

TEST(PurePushforward, MatchesNestedQuadratureOracle) {
  RngStream rng(31, {1});
  const std::array<PureProductSpec, 5> specs{{{kNormal, kCExp}, {kCExp, kNormal}, {kCExp, kCExp},
                                              {kExp, kNormal}, {kExp, kExp}}};
  for (int i = 0; i < 12; ++i) {
    const auto a = i == 0 ? causal_a() : random_matrix(rng);
    const auto x = random_point(rng);
    for (const auto& spec : specs) {
      const double oracle = oracle::pushforward_cdf_quadrature(a, spec.first, spec.second, x);
      EXPECT_NEAR(pure_pushforward_cdf(a, spec, x), oracle, tolerance::kOracleQuadAbs)
          << a.to_string() << " x=(" << x.x1 << "," << x.x2 << ")";
    }
  }
}

TEST(PurePushforward, ConvergesOnTypicalInputs) {
  RngStream rng(32, {});
  for (int i = 0; i < 30; ++i) {
    const auto r = pure_pushforward_cdf_detailed(random_matrix(rng), {kNormal, kCExp}, random_point(rng));
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.abs_error, 1e-10);
  }
}

TEST(PurePushforward, ColumnPermutationInvariance) {
  RngStream rng(33, {});
  const std::array<PureProductSpec, 4> specs{{{kNormal, kNormal}, {kNormal, kCExp}, {kCExp, kNormal}, {kCExp, kCExp}}};
  for (int i = 0; i < 40; ++i) {
    const auto a = random_matrix(rng);
    const auto x = random_point(rng);
    for (const auto& spec : specs) {
      EXPECT_NEAR(pure_pushforward_cdf(a.swapped_columns(), spec.swapped(), x), pure_pushforward_cdf(a, spec, x),
                  tolerance::kPermutationAbs);
    }
  }
}

TEST(PurePushforward, AxisAlignedConstraint) {
  // a12 = 0: the first constraint involves e1 only.
  const MixingMatrix2 a(1.0, 0.0, 0.5, 1.0);
  for (const auto& spec : {PureProductSpec{kCExp, kNormal}, PureProductSpec{kNormal, kCExp}}) {
    const Point2 x{0.2, -0.4};
    EXPECT_NEAR(pure_pushforward_cdf(a, spec, x), oracle::pushforward_cdf_quadrature(a, spec.first, spec.second, x),
                tolerance::kOracleQuadAbs);
  }
}

TEST(PurePushforward, RejectsNaN) {
  EXPECT_THROW(pure_pushforward_cdf(causal_a(), {kNormal, kCExp}, {std::nan(""), 0}), std::invalid_argument);
}

TEST(MixingMatrix, RejectsSingular) {
  EXPECT_THROW(MixingMatrix2(1, 2, 2, 4), std::invalid_argument);
  EXPECT_THROW(MixingMatrix2(0, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(MixingMatrix2::lower_causal(1.0), std::invalid_argument);
}

TEST(MixingMatrix, ParseRoundTrip) {
  const auto a = MixingMatrix2(0.3, -1.25, 2.0, 1.0 / 3.0);
  EXPECT_EQ(MixingMatrix2::parse(a.to_string()), a);
}

TEST(Mixture, Weights) {
  const auto w = mixture_weights(0.3);
  EXPECT_NEAR(w[0], 0.49, 1e-15);
  EXPECT_NEAR(w[1], 0.21, 1e-15);
  EXPECT_NEAR(w[2], 0.21, 1e-15);
  EXPECT_NEAR(w[3], 0.09, 1e-15);
  EXPECT_THROW(mixture_weights(1.5), std::invalid_argument);
}

TEST(Mixture, BetaZeroIsGaussian) {
  RngStream rng(34, {});
  for (int i = 0; i < 20; ++i) {
    const auto x = random_point(rng);
    EXPECT_EQ(mixture_pushforward_cdf(causal_a(), 0.0, x), pure_pushforward_cdf(causal_a(), {kNormal, kNormal}, x));
  }
}

TEST(Mixture, AgreesWithLargeMonteCarlo) {
  const std::uint64_t n = 10000000;
  RngStream rng(35, {1});
  const Point2 x{0.3, -0.2};
  const double exact = mixture_pushforward_cdf(causal_a(), 0.5, x);
  const double mc = oracle_cdf_mc(causal_a(), 0.5, x, n, rng);
  EXPECT_LE(std::abs(exact - mc), tolerance::kOracleMcSigmas * mc_sigma(exact, n));
}

TEST(Mixture, BatchAndObjectAgreeWithScalar) {
  RngStream rng(36, {});
  std::vector<Point2> pts(25);
  for (auto& p : pts) p = random_point(rng);
  std::vector<double> batch(pts.size()), obj(pts.size());
  mixture_pushforward_cdf_batch(causal_a(), 0.3, pts, batch);
  MixtureCdf(causal_a(), 0.3).evaluate(pts, obj);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double scalar = mixture_pushforward_cdf(causal_a(), 0.3, pts[i]);
    EXPECT_EQ(batch[i], scalar);
    EXPECT_NEAR(obj[i], scalar, 1e-15);
  }
}

TEST(Mixture, MonotoneAndBounded) {
  RngStream rng(37, {});
  for (int chain = 0; chain < 10; ++chain) {
    const auto a = random_matrix(rng);
    Point2 x{-4, -4};
    double prev = mixture_pushforward_cdf(a, 0.4, x);
    for (int step = 0; step < 15; ++step) {
      x.x1 += 0.6 * rng.uniform();
      x.x2 += 0.6 * rng.uniform();
      const double v = mixture_pushforward_cdf(a, 0.4, x);
      ASSERT_GE(v, prev - 1e-10);
      ASSERT_GE(v, -1e-12);
      ASSERT_LE(v, 1.0 + 1e-12);
      prev = v;
    }
    EXPECT_GE(mixture_pushforward_cdf(a, 0.4, {40, 40}), 1.0 - 1e-9);
    EXPECT_LE(mixture_pushforward_cdf(a, 0.4, {-40, 1.0}), 1e-9);
  }
}

TEST(OracleMc, Examples) {
  RngStream rng(38, {});
  const std::uint64_t n = 1000000;
  const double expected = 0.25 + std::asin(0.4) / (2 * M_PI);
  EXPECT_LE(std::abs(oracle_cdf_mc(causal_a(), 0.0, {0, 0}, n, rng) - expected), 4 * mc_sigma(expected, n));
  EXPECT_EQ(oracle_cdf_mc(causal_a(), 0.0, {-20, -20}, n, rng), 0.0);
  EXPECT_THROW(oracle_cdf_mc(causal_a(), 0.0, {0, 0}, 0, rng), std::invalid_argument);
}
