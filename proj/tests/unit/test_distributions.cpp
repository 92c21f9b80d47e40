#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "contica/distributions.hpp"
#include "contica/rng.hpp"
#include "contica/special.hpp"
#include "oracles.hpp"

using namespace contica;

namespace {

constexpr std::size_t kDkwN = 100000;

std::vector<double> draw(const auto& law, std::size_t n, RngStream rng) {
  std::vector<double> out(n);
  for (auto& v : out) v = law.sample(rng);
  return out;
}

}  // namespace

TEST(ComponentCdf, StandardNormalAtZeroIsHalf) {
  EXPECT_DOUBLE_EQ(ComponentLaw::normal().cdf(0.0), 0.5);
}

TEST(ComponentCdf, StandardNormalMatchesSeriesOracle) {
  for (double t : {-8.0, -3.5, -1.0, -0.2, 0.0, 0.7, 1.0, 2.5, 6.0}) {
    const double expected = static_cast<double>(oracle::normal_cdf_series(t));
    EXPECT_NEAR(ComponentLaw::normal().cdf(t), expected, 1e-12) << t;
  }
  EXPECT_NEAR(ComponentLaw::normal().cdf(1.0), 0.8413447, 5e-8);
}

TEST(ComponentCdf, CenteredExponentialAtZero) {
  EXPECT_NEAR(ComponentLaw::centered_exponential().cdf(0.0), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_EQ(ComponentLaw::centered_exponential().cdf(-1.0), 0.0);
  EXPECT_EQ(ComponentLaw::exponential().cdf(-1e-9), 0.0);
}

TEST(ComponentCdf, RejectsNonFinite) {
  EXPECT_THROW(ComponentLaw::normal().cdf(std::nan("")), std::invalid_argument);
  EXPECT_THROW(ComponentLaw::centered_exponential().cdf(INFINITY), std::invalid_argument);
}

TEST(ComponentCdf, MonotoneWithNegligibleTails) {
  for (auto law : {ComponentLaw::normal(), ComponentLaw::centered_exponential(),
                   ComponentLaw::exponential()}) {
    double prev = 0.0;
    for (double t = -25.0; t <= 25.0; t += 0.01) {
      const double v = law.cdf(t);
      ASSERT_GE(v, prev);
      ASSERT_LE(v, 1.0);
      prev = v;
    }
    EXPECT_LE(law.cdf(-20.0), 1e-12);
    EXPECT_LE(1.0 - law.cdf(law.is_normal() ? 20.0 : 30.0), 1e-12);
  }
}

TEST(ComponentSampler, MeanWithinFourSigma) {
  const std::size_t n = 1000000;
  for (auto law : {ComponentLaw::normal(), ComponentLaw::centered_exponential()}) {
    const auto xs = draw(law, n, RngStream(7, {1, static_cast<std::uint64_t>(law.kind())}));
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
    EXPECT_LE(std::abs(mean), 4.0 / std::sqrt(static_cast<double>(n)));
  }
}

TEST(ComponentSampler, KolmogorovWithinDkwBound) {
  for (auto law : {ComponentLaw::normal(), ComponentLaw::centered_exponential(),
                   ComponentLaw::exponential()}) {
    const auto xs = draw(law, kDkwN, RngStream(11, {static_cast<std::uint64_t>(law.kind())}));
    const double d = oracle::ks_statistic(xs, [&](double t) { return law.cdf(t); });
    EXPECT_LE(d, oracle::dkw_bound(kDkwN, 0.001)) << to_string(law.kind());
  }
}

TEST(ComponentSampler, CenteredExponentialRespectsSupport) {
  RngStream rng(3, {9});
  for (int i = 0; i < 200000; ++i) ASSERT_GE(ComponentLaw::centered_exponential().sample(rng), -1.0);
}

TEST(ComponentSampler, DeterministicPerStream) {
  const auto a = draw(ComponentLaw::normal(), 1000, RngStream(5, {1, 2}));
  const auto b = draw(ComponentLaw::normal(), 1000, RngStream(5, {1, 2}));
  const auto c = draw(ComponentLaw::normal(), 1000, RngStream(5, {1, 3}));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Rng, SubstreamDoesNotDependOnParentConsumption) {
  RngStream parent(99, {4});
  const RngStream fresh_child = parent.substream(2);
  for (int i = 0; i < 50; ++i) parent.uniform();
  RngStream child_after = parent.substream(2);
  RngStream child_before = fresh_child;
  for (int i = 0; i < 20; ++i) EXPECT_EQ(child_after.uniform(), child_before.uniform());
}

TEST(Rng, UniformIsOpenUnitInterval) {
  RngStream rng(1, {});
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(ContaminatedLaw, CdfExamples) {
  EXPECT_NEAR(ContaminatedLaw(0.0).cdf(0.0), 0.5, 1e-15);
  EXPECT_NEAR(ContaminatedLaw(1.0).cdf(0.0), 0.6321206, 5e-8);
  EXPECT_NEAR(ContaminatedLaw(0.5).cdf(0.0), 0.5660603, 5e-8);
}

TEST(ContaminatedLaw, RejectsBadArguments) {
  EXPECT_THROW(ContaminatedLaw(-0.1), std::invalid_argument);
  EXPECT_THROW(ContaminatedLaw(1.1), std::invalid_argument);
  EXPECT_THROW(ContaminatedLaw(0.5, LawPair{ComponentLaw::normal(), ComponentLaw::normal()}),
               std::invalid_argument);
}

TEST(ContaminatedLaw, BetaZeroSamplesLookGaussian) {
  const auto mixed = draw(ContaminatedLaw(0.0), kDkwN, RngStream(21, {1}));
  const auto pure = draw(ComponentLaw::normal(), kDkwN, RngStream(21, {2}));
  EXPECT_LE(oracle::ks_two_sample(mixed, pure), oracle::ks_two_sample_critical_1pct(kDkwN, kDkwN));
}

TEST(ContaminatedLaw, MixtureSamplesMatchCdfAndMean) {
  const ContaminatedLaw law(0.3);
  const auto xs = draw(law, kDkwN, RngStream(22, {1}));
  EXPECT_LE(oracle::ks_statistic(xs, [&](double t) { return law.cdf(t); }),
            oracle::dkw_bound(kDkwN, 0.001));
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(kDkwN);
  // Both components have unit variance and mean zero.
  EXPECT_LE(std::abs(mean), 4.0 / std::sqrt(static_cast<double>(kDkwN)));
}

TEST(KolmogorovDistance, ZeroForEqualLaws) {
  EXPECT_EQ(kolmogorov_distance(ComponentLaw::normal(), ComponentLaw::normal()), 0.0);
}

TEST(KolmogorovDistance, CenteredExponentialVersusNormal) {
  const auto xi = ComponentLaw::centered_exponential();
  const auto zeta = ComponentLaw::normal();
  const double brute = oracle::brute_force_sup(
      [&](double t) { return xi.cdf(t) - zeta.cdf(t); }, -8.0, 12.0, 4000001);
  const double got = kolmogorov_distance(xi, zeta);
  EXPECT_NEAR(got, brute, 1e-7);
  // The sup is attained at the support edge -1, where the gap is Phi(-1).
  EXPECT_NEAR(got, static_cast<double>(oracle::normal_cdf_series(-1.0L)), 1e-7);
  EXPECT_NEAR(contamination_norm(LawPair::standard(true)), got, 1e-12);
}

TEST(KolmogorovDistance, UncenteredExponentialVersusNormalIsHalf) {
  EXPECT_NEAR(contamination_norm(LawPair::standard(false)), 0.5, 1e-9);
}

TEST(KolmogorovDistance, LinearInBeta) {
  const double norm = contamination_norm(LawPair{});
  for (double beta : {0.1, 0.5}) {
    EXPECT_NEAR(kolmogorov_distance(ContaminatedLaw(beta), ComponentLaw::normal()), beta * norm, 1e-6)
        << beta;
  }
}

TEST(KolmogorovDistance, NormalizedDirectionDoesNotDependOnBeta) {
  const double norm = contamination_norm(LawPair{});
  for (double t : {-1.0, -0.3, 0.0, 0.8, 2.0}) {
    const double base = ComponentLaw::centered_exponential().cdf(t) - ComponentLaw::normal().cdf(t);
    for (double beta : {0.05, 0.2, 0.7}) {
      const double diff = ContaminatedLaw(beta).cdf(t) - ComponentLaw::normal().cdf(t);
      EXPECT_NEAR(diff / (beta * norm), base / norm, 1e-9);
    }
  }
}

TEST(ParseComponentKind, KnownAndUnknownNames) {
  EXPECT_EQ(parse_component_kind("normal"), ComponentKind::StandardNormal);
  EXPECT_THROW(parse_component_kind("cauchy"), std::invalid_argument);
}
