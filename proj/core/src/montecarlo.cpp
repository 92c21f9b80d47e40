#include "contica/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "contica/cdf_engine.hpp"
#include "contica/parallel.hpp"

namespace contica {

BetaSchedule BetaSchedule::power(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive");
  return {Kind::Power, rho};
}

BetaSchedule BetaSchedule::fixed(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
  return {Kind::Fixed, beta};
}

BetaSchedule BetaSchedule::root_scaled(double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw std::invalid_argument("k must be >= 0");
  return {Kind::RootScaled, k};
}

double BetaSchedule::rho() const noexcept {
  return kind_ == Kind::Power ? value_ : std::numeric_limits<double>::quiet_NaN();
}

double BetaSchedule::beta_at(std::size_t n) const noexcept {
  const double nn = static_cast<double>(n);
  switch (kind_) {
    case Kind::Power: return std::pow(nn, -value_);
    case Kind::Fixed: return value_;
    case Kind::RootScaled: return value_ / std::sqrt(nn);
  }
  return 0.0;
}

void Scenario::validate() const {
  if (n < 1) throw std::invalid_argument("scenario needs n >= 1");
  if (reps < 1) throw std::invalid_argument("scenario needs N >= 1");
  if (!(c >= 0.0)) throw std::invalid_argument("scenario needs c >= 0");
  if (grid.points < 1) throw std::invalid_argument("scenario needs M >= 1");
  const double b = beta();
  if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("beta_n must lie in [0,1]");
}

double run_replication(const Scenario& scenario, std::uint64_t rep_index) {
  RngStream rng(scenario.seed, {scenario.id, rep_index});
  const double beta = scenario.beta();
  const std::vector<Point2> sample = draw_sample(scenario.a, beta, scenario.n, rng, scenario.laws);
  EvalGridSpec grid_spec = scenario.grid;
  if (grid_spec.mode == GridMode::CornerSubsample) {
    const std::uint64_t n = scenario.n;
    grid_spec.points = static_cast<std::size_t>(std::min<std::uint64_t>(grid_spec.points, n * n));
  }
  const std::vector<Point2> grid = build_eval_grid(sample, grid_spec, rng);
  std::vector<double> target(grid.size());
  MixtureCdf(scenario.b, beta, scenario.laws).evaluate(grid, target);
  return sup_stat(EmpiricalCdf(sample), grid, target);
}

double exceedance_fraction(std::span<const double> statistics, double c) {
  if (statistics.empty()) throw std::invalid_argument("no statistics");
  const auto count = std::count_if(statistics.begin(), statistics.end(), [c](double x) { return x > c; });
  return static_cast<double>(count) / static_cast<double>(statistics.size());
}

double binomial_stderr(double p, std::size_t reps) noexcept {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
}

namespace {

ScenarioResult summarize(const Scenario& s, std::vector<double> stats, bool retain,
                         std::optional<double> wall_ms) {
  ScenarioResult r;
  r.scenario_id = s.id;
  r.rho = s.schedule.rho();
  r.beta = s.beta();
  r.n = s.n;
  r.c = s.c;
  r.reps = s.reps;
  r.grid_mode = s.grid.mode;
  r.grid_points = s.grid.points;
  r.estimate = exceedance_fraction(stats, s.c);
  r.stderr_ = binomial_stderr(r.estimate, s.reps);
  r.seed = s.seed;
  r.wall_ms = wall_ms;
  if (retain) r.statistics = std::move(stats);
  return r;
}

using Clock = std::chrono::steady_clock;

}  // namespace

ScenarioResult estimate_probability(const Scenario& scenario, const RunOptions& options) {
  scenario.validate();
  const auto start = Clock::now();
  std::vector<double> stats(scenario.reps);
  parallel_for(scenario.reps, options.workers,
               [&](std::size_t i) { stats[i] = run_replication(scenario, i); });
  std::optional<double> wall;
  if (options.record_timing) {
    wall = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  return summarize(scenario, std::move(stats), options.retain_statistics, wall);
}

ScenarioResult rethreshold(const ScenarioResult& result, double c) {
  if (result.statistics.empty()) throw std::invalid_argument("result has no retained statistics");
  ScenarioResult r = result;
  r.c = c;
  r.estimate = exceedance_fraction(r.statistics, c);
  r.stderr_ = binomial_stderr(r.estimate, r.reps);
  return r;
}

std::vector<Scenario> SweepConfig::scenarios() const {
  std::vector<Scenario> out;
  std::uint64_t id = 0;
  for (double rho : rho_list) {
    for (std::size_t n : n_list) {
      Scenario s;
      s.id = id++;
      s.a = matrices.a;
      s.b = matrices.b;
      s.laws = laws;
      s.schedule = BetaSchedule::power(rho);
      s.n = n;
      s.c = c;
      s.reps = reps;
      s.grid = grid;
      s.seed = seed;
      out.push_back(s);
    }
  }
  return out;
}

void SweepConfig::validate() const {
  if (rho_list.empty()) throw std::invalid_argument("sweep needs a nonempty rho list");
  if (n_list.empty()) throw std::invalid_argument("sweep needs a nonempty n list");
  for (const Scenario& s : scenarios()) s.validate();
}

SweepConfig sweep_preset(std::string_view name, bool full_scale) {
  SweepConfig cfg;
  cfg.preset = std::string(name);
  // Presets use the plain Exp(1) contamination; see README.
  cfg.laws = LawPair::standard(false);
  cfg.c = 1.0;
  cfg.reps = full_scale ? 1000 : 200;
  cfg.grid = {GridMode::CornerSubsample, full_scale ? std::size_t{1000} : std::size_t{500}};
  if (name == "fig1-left") {
    cfg.rho_list = {0.25, 0.35, 0.50, 0.75};
    cfg.n_list = {100, 250, 500, 1000, 2000, 3500, 5000};
  } else if (name == "fig1-right") {
    cfg.rho_list.clear();
    for (int i = 0; i <= 10; ++i) cfg.rho_list.push_back(0.25 + 0.05 * i);
    cfg.n_list = {50000};
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  return cfg;
}

std::vector<ScenarioResult> run_sweep(const SweepConfig& config, const RunOptions& options) {
  config.validate();
  std::vector<ScenarioResult> results;
  // Scenarios run one after another, each parallel over its replications, so
  // wall_ms is the scenario's own elapsed time.
  for (const Scenario& s : config.scenarios()) results.push_back(estimate_probability(s, options));
  return results;
}

}  // namespace contica

namespace contica {

double KEstimate::scale_ratio() const noexcept {
  if (k == 0.0) return k_direct == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return k_direct / k;
}

KEstimate estimate_K(const MixingMatrix2& a, const MixingMatrix2& b, const LawPair& laws,
                     const EvalGrid& grid, double check_beta) {
  if (!(check_beta > 0.0 && check_beta < 1.0)) throw std::invalid_argument("check beta must lie in (0,1)");
  const NuMeasure nu(laws);
  KEstimate out;
  out.check_beta = check_beta;
  out.norm_c = nu.norm_c();
  out.gamma_sup = estimate_sup_norm([&](Point2 x) { return gamma_diff_at(a, b, x, nu); }, grid);
  out.k = out.gamma_sup.value * nu.norm_c();

  const MixtureCdf fa(a, check_beta, laws);
  const MixtureCdf fb(b, check_beta, laws);
  out.k_direct = estimate_sup_norm([&](Point2 x) { return fa(x) - fb(x); }, grid).value / check_beta;
  return out;
}

double predict_threshold_n(double rho, double c, double k) {
  if (!(rho > 0.0 && rho < 0.5)) throw std::invalid_argument("threshold heuristic needs 0 < rho < 1/2");
  if (!(c > 0.0) || !(k > 0.0)) throw std::invalid_argument("threshold heuristic needs c > 0 and K > 0");
  return std::exp(std::log(c / k) / (0.5 - rho));
}

}  // namespace contica
