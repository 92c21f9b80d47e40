#include <vector>

#include <benchmark/benchmark.h>

#include "contica/bvn.hpp"
#include "contica/cdf_engine.hpp"
#include "contica/empirical.hpp"
#include "contica/montecarlo.hpp"
#include "contica/rng.hpp"

using namespace contica;

namespace {

std::vector<Point2> points(std::size_t m, std::uint64_t seed) {
  RngStream rng(seed, {});
  std::vector<Point2> out(m);
  for (auto& p : out) p = {-3 + 6 * rng.uniform(), -3 + 6 * rng.uniform()};
  return out;
}

void BM_Bvn(benchmark::State& state) {
  const auto pts = points(1024, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = pts[i++ & 1023];
    benchmark::DoNotOptimize(bvn_cdf(p.x1, p.x2, 0.4));
  }
}
BENCHMARK(BM_Bvn);

void BM_PureMixed(benchmark::State& state) {
  const auto a = MixingMatrix2::lower_causal(0.4);
  const auto pts = points(1024, 2);
  const PureProductSpec spec{ComponentLaw::normal(), ComponentLaw::centered_exponential()};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pure_pushforward_cdf(a, spec, pts[i++ & 1023]));
}
BENCHMARK(BM_PureMixed);

void BM_PureExpExp(benchmark::State& state) {
  const auto a = MixingMatrix2::lower_causal(0.4);
  const auto pts = points(1024, 3);
  const PureProductSpec spec{ComponentLaw::centered_exponential(), ComponentLaw::centered_exponential()};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pure_pushforward_cdf(a, spec, pts[i++ & 1023]));
}
BENCHMARK(BM_PureExpExp);

void BM_MixtureCdf(benchmark::State& state) {
  const MixtureCdf f(MixingMatrix2::upper_causal(0.4), 0.1);
  const auto pts = points(1024, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(f(pts[i++ & 1023]));
}
BENCHMARK(BM_MixtureCdf);

void BM_EcdfCountBatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(5, {});
  const auto sample = draw_sample(MixingMatrix2::lower_causal(0.4), 0.1, n, rng);
  const EmpiricalCdf f(sample);
  const auto grid = build_eval_grid(sample, {GridMode::CornerSubsample, 1000}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(f.count_batch(grid));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EcdfCountBatch)->RangeMultiplier(4)->Range(1000, 64000)->Complexity();

void BM_Replication(benchmark::State& state) {
  Scenario s;
  s.n = static_cast<std::size_t>(state.range(0));
  s.grid = {GridMode::CornerSubsample, 500};
  std::uint64_t rep = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_replication(s, rep++));
}
BENCHMARK(BM_Replication)->Arg(1000)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
