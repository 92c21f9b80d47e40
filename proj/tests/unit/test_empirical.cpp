#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "contica/cdf_engine.hpp"
#include "contica/empirical.hpp"
#include "contica/montecarlo.hpp"
#include "contica/rng.hpp"
#include "oracles.hpp"

using namespace contica;

namespace {

MixingMatrix2 causal_a() { return MixingMatrix2::lower_causal(0.4); }

// Exact max over every lattice corner of both one-sided gaps, by direct counting.
double lattice_sup_by_counting(const std::vector<Point2>& sample, const std::function<double(Point2)>& g) {
  const double n = static_cast<double>(sample.size());
  double best = 0;
  for (const auto& p : sample) {
    for (const auto& q : sample) {
      const Point2 x{p.x1, q.x2};
      int le = 0, lt = 0;
      for (const auto& s : sample) {
        le += (s.x1 <= x.x1 && s.x2 <= x.x2);
        lt += (s.x1 < x.x1 && s.x2 < x.x2);
      }
      const double gx = g(x);
      best = std::max({best, std::abs(le / n - gx), std::abs(lt / n - gx)});
    }
  }
  return std::sqrt(n) * best;
}

}  // namespace

TEST(DrawSample, GaussianMarginalAndCovariance) {
  const std::size_t n = 100000;
  RngStream rng(51, {});
  const auto xs = draw_sample(causal_a(), 0.0, n, rng);
  std::vector<double> first(n);
  double s11 = 0, s12 = 0, s22 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = xs[i].x1;
    s11 += xs[i].x1 * xs[i].x1;
    s12 += xs[i].x1 * xs[i].x2;
    s22 += xs[i].x2 * xs[i].x2;
  }
  EXPECT_LE(oracle::ks_statistic(first, [](double t) { return static_cast<double>(oracle::normal_cdf_series(t)); }),
            oracle::dkw_bound(n, 0.001));
  // Var(X_i X_j) = S_ii S_jj + S_ij^2 for a centered Gaussian vector.
  const double rn = static_cast<double>(n);
  EXPECT_NEAR(s11 / rn, 1.0, 4 * std::sqrt(2.0 / rn));
  EXPECT_NEAR(s12 / rn, 0.4, 4 * std::sqrt(1.16 / rn));
  EXPECT_NEAR(s22 / rn, 1.0, 4 * std::sqrt(2.0 / rn));
}

TEST(DrawSample, Deterministic) {
  RngStream r1(52, {1}), r2(52, {1});
  EXPECT_EQ(draw_sample(causal_a(), 0.3, 500, r1), draw_sample(causal_a(), 0.3, 500, r2));
}

TEST(EmpiricalCdfTest, SinglePoint) {
  const std::vector<Point2> s{{0, 0}};
  const EmpiricalCdf f(s);
  const std::vector<Point2> g{{0, 0}, {-1, 5}, {1, 1}};
  EXPECT_EQ(f.eval_batch(g), (std::vector<double>{1, 0, 1}));
  EXPECT_EQ(f.eval_batch(g, true), (std::vector<double>{0, 0, 1}));
}

TEST(EmpiricalCdfTest, FenwickMatchesNaiveOnRandomCasesWithTies) {
  RngStream rng(53, {});
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(300);
    const std::size_t m = 1 + rng.below(60);
    // Coarse coordinates force many ties between sample and query points.
    const bool coarse = trial % 2 == 0;
    const auto coord = [&] {
      const double v = -3 + 6 * rng.uniform();
      return coarse ? std::round(v * 4) / 4 : v;
    };
    std::vector<Point2> sample(n), grid(m);
    for (auto& p : sample) p = {coord(), coord()};
    for (std::size_t j = 0; j < m; ++j) {
      grid[j] = (j % 3 == 0) ? Point2{sample[rng.below(n)].x1, sample[rng.below(n)].x2} : Point2{coord(), coord()};
    }
    const EmpiricalCdf f(sample);
    for (bool strict : {false, true}) {
      ASSERT_EQ(f.count_batch(grid, strict), count_dominated_naive(sample, grid, strict)) << trial;
    }
  }
}

TEST(EvalGridBuild, CornerSubsampleProperties) {
  RngStream rng(54, {});
  const auto sample = draw_sample(causal_a(), 0.2, 40, rng);
  RngStream g1(54, {7}), g2(54, {7});
  const auto a = build_eval_grid(sample, {GridMode::CornerSubsample, 300}, g1);
  const auto b = build_eval_grid(sample, {GridMode::CornerSubsample, 300}, g2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 300u);
  EXPECT_EQ(std::set<Point2>(a.begin(), a.end()).size(), 300u);
  std::set<double> xs1, xs2;
  for (const auto& p : sample) xs1.insert(p.x1), xs2.insert(p.x2);
  for (const auto& p : a) {
    ASSERT_TRUE(xs1.count(p.x1));
    ASSERT_TRUE(xs2.count(p.x2));
  }
  RngStream g3(54, {8});
  auto full = build_eval_grid(sample, {GridMode::CornerSubsample, 1600}, g3);
  auto all = full_corner_grid(sample);
  std::sort(full.begin(), full.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(full, all);
}

TEST(EvalGridBuild, TwoPointFullGrid) {
  const std::vector<Point2> s{{0, 1}, {2, -1}};
  RngStream rng(1, {});
  auto g = build_eval_grid(s, {GridMode::CornerSubsample, 4}, rng);
  std::sort(g.begin(), g.end());
  EXPECT_EQ(g, (std::vector<Point2>{{0, -1}, {0, 1}, {2, -1}, {2, 1}}));
}

TEST(EvalGridBuild, Errors) {
  const std::vector<Point2> s{{0, 1}, {2, -1}};
  RngStream rng(1, {});
  EXPECT_THROW(build_eval_grid(s, {GridMode::CornerSubsample, 0}, rng), std::invalid_argument);
  EXPECT_THROW(build_eval_grid(s, {GridMode::CornerSubsample, 5}, rng), std::invalid_argument);
  EXPECT_THROW(parse_grid_mode("diagonal"), std::invalid_argument);
  EXPECT_EQ(parse_grid_mode(to_string(GridMode::QuantileTensor)), GridMode::QuantileTensor);
}

TEST(EvalGridBuild, QuantileTensorSize) {
  RngStream rng(55, {});
  const auto sample = draw_sample(causal_a(), 0.0, 100, rng);
  EXPECT_EQ(build_eval_grid(sample, {GridMode::QuantileTensor, 1000}, rng).size(), 32u * 32u);
  EXPECT_EQ(build_eval_grid(sample, {GridMode::QuantileTensor, 49}, rng).size(), 49u);
}

TEST(SupStat, SinglePointExample) {
  const std::vector<Point2> s{{0, 0}};
  const EmpiricalCdf f(s);
  const std::vector<double> target{0.25};
  EXPECT_DOUBLE_EQ(sup_stat(f, s, target), 0.75);
}

TEST(SupStat, ZeroAgainstItsOwnEmpiricalCdf) {
  RngStream rng(56, {});
  const auto sample = draw_sample(causal_a(), 0.0, 50, rng);
  const EmpiricalCdf f(sample);
  const auto grid = full_corner_grid(sample);
  const auto closed = f.eval_batch(grid);
  const auto open = f.eval_batch(grid, true);
  EXPECT_EQ(sup_stat(f, grid, closed, std::span<const double>(open)), 0.0);
  EXPECT_GT(sup_stat(f, grid, closed), 0.0);
}

TEST(SupStat, FullCornerMatchesCountingAndBoundsSubsamples) {
  RngStream rng(57, {});
  const MixtureCdf target(causal_a(), 0.3);
  const std::function<double(Point2)> g = [&](Point2 x) { return target(x); };
  for (int trial = 0; trial < 5; ++trial) {
    const auto sample = draw_sample(causal_a(), 0.3, 30 + 20 * trial, rng);
    const EmpiricalCdf f(sample);
    const double exact = lattice_sup_by_counting(sample, g);
    EXPECT_NEAR(sup_stat(f, full_corner_grid(sample), g), exact, 1e-12);
    for (std::size_t m : {10u, 100u, 500u}) {
      auto grid = build_eval_grid(sample, {GridMode::CornerSubsample, m}, rng);
      EXPECT_LE(sup_stat(f, grid, g), exact + 1e-12);
    }
  }
}

TEST(SupStat, AddingPointsNeverDecreases) {
  RngStream rng(58, {});
  const MixtureCdf target(causal_a(), 0.0);
  const std::function<double(Point2)> g = [&](Point2 x) { return target(x); };
  for (int trial = 0; trial < 20; ++trial) {
    const auto sample = draw_sample(causal_a(), 0.0, 60, rng);
    const EmpiricalCdf f(sample);
    auto grid = build_eval_grid(sample, {GridMode::CornerSubsample, 50}, rng);
    double prev = sup_stat(f, grid, g);
    for (int step = 0; step < 4; ++step) {
      auto extra = build_eval_grid(sample, {GridMode::CornerSubsample, 200}, rng);
      grid.insert(grid.end(), extra.begin(), extra.end());
      const double next = sup_stat(f, grid, g);
      ASSERT_GE(next, prev);
      prev = next;
    }
  }
}

TEST(SupStat, NullLawIsRoughlyPivotalInN) {
  const auto stats = [](std::size_t n) {
    Scenario s;
    s.a = s.b = causal_a();
    s.schedule = BetaSchedule::fixed(0.0);
    s.n = n;
    s.reps = 500;
    s.grid = {GridMode::CornerSubsample, 1000};
    s.seed = 59;
    s.id = n;
    return estimate_probability(s, {.workers = 0}).statistics;
  };
  EXPECT_LE(oracle::ks_two_sample(stats(2000), stats(4000)), oracle::ks_two_sample_critical_1pct(500, 500));
}
