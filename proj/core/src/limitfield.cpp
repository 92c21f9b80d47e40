#include "contica/limitfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "contica/cdf_engine.hpp"
#include "contica/parallel.hpp"

namespace contica {

namespace {
// Keeps limit-law streams disjoint from sweep scenario ids.
constexpr std::uint64_t kLimitStreamTag = 0x4c494d4954ULL;
}  // namespace

double LimitLawSample::survival(double c) const {
  if (draws.empty()) throw std::invalid_argument("limit sample is empty");
  const auto k = std::count_if(draws.begin(), draws.end(), [c](double d) { return d > c; });
  return static_cast<double>(k) / static_cast<double>(draws.size());
}

double LimitLawSample::survival_inclusive(double c) const {
  if (draws.empty()) throw std::invalid_argument("limit sample is empty");
  const auto k = std::count_if(draws.begin(), draws.end(), [c](double d) { return d >= c; });
  return static_cast<double>(k) / static_cast<double>(draws.size());
}

double LimitLawSample::stderr_at(double c) const {
  return binomial_stderr(survival(c), draws.size());
}

LimitLawSample simulate_limit_sup(const MixingMatrix2& a, const LimitOptions& options,
                                  const RunOptions& run) {
  if (options.n0 < 1 || options.reps < 1) throw std::invalid_argument("limit simulation needs n0, N >= 1");
  LimitLawSample out;
  out.n0 = options.n0;
  out.draws.resize(options.reps);
  const MixtureCdf target(a, 0.0, options.laws);
  parallel_for(options.reps, run.workers, [&](std::size_t i) {
    RngStream rng(options.seed, {kLimitStreamTag, options.n0, i});
    const std::vector<Point2> sample = draw_sample(a, 0.0, options.n0, rng, options.laws);
    EvalGridSpec spec = options.grid;
    if (spec.mode == GridMode::CornerSubsample) {
      const std::uint64_t n = options.n0;
      spec.points = static_cast<std::size_t>(std::min<std::uint64_t>(spec.points, n * n));
    }
    const std::vector<Point2> grid = build_eval_grid(sample, spec, rng);
    std::vector<double> values(grid.size());
    target.evaluate(grid, values);
    out.draws[i] = sup_stat(EmpiricalCdf(sample), grid, values);
  });
  return out;
}

SandwichBounds sandwich_bounds(double k, double c, const LimitLawSample& limit, double norm_c, int p) {
  if (!(k >= 0.0) || !(c >= 0.0)) throw std::invalid_argument("sandwich bounds need k, c >= 0");
  const double shift = 4.0 * p * k * norm_c;
  SandwichBounds b;
  b.lower = limit.survival(c + shift);
  b.upper = c - shift <= 0.0 ? 1.0 : limit.survival_inclusive(c - shift);
  return b;
}

}  // namespace contica
