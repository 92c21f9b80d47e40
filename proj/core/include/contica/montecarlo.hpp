#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contica/distributions.hpp"
#include "contica/empirical.hpp"
#include "contica/matrix.hpp"
#include "contica/signed_measure.hpp"

namespace contica {

/// Contamination level as a function of n.
class BetaSchedule {
 public:
  enum class Kind { Power, Fixed, RootScaled };

  /// beta_n = n^(-rho), rho > 0.
  static BetaSchedule power(double rho);
  /// beta_n = beta for every n.
  static BetaSchedule fixed(double beta);
  /// beta_n = k / sqrt(n), k >= 0.
  static BetaSchedule root_scaled(double k);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return value_; }
  /// rho for power schedules, NaN otherwise.
  double rho() const noexcept;
  double beta_at(std::size_t n) const noexcept;

 private:
  BetaSchedule(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

struct Scenario {
  std::uint64_t id = 0;
  MixingMatrix2 a = MixingMatrix2::lower_causal(0.4);
  MixingMatrix2 b = MixingMatrix2::upper_causal(0.4);
  LawPair laws{};
  BetaSchedule schedule = BetaSchedule::power(0.25);
  std::size_t n = 1000;
  double c = 1.0;
  std::size_t reps = 200;
  EvalGridSpec grid{GridMode::CornerSubsample, 500};
  std::uint64_t seed = 0;

  double beta() const noexcept { return schedule.beta_at(n); }
  /// Throws std::invalid_argument on n = 0, reps = 0, c < 0, beta_n outside [0,1].
  void validate() const;
};

struct ScenarioResult {
  std::uint64_t scenario_id = 0;
  double rho = 0.0;  // NaN for non-power schedules
  double beta = 0.0;
  std::size_t n = 0;
  double c = 0.0;
  std::size_t reps = 0;
  GridMode grid_mode = GridMode::CornerSubsample;
  std::size_t grid_points = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t seed = 0;
  std::optional<double> wall_ms;
  /// Per-replication statistics in replication order (empty unless retained).
  std::vector<double> statistics;
};

struct RunOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
  bool retain_statistics = true;
  bool record_timing = false;
};

/// One draw of sqrt(n) ||F_n^A - F^B_{beta_n}||_inf on the thinned grid. Pure
/// function of (scenario, rep_index).
double run_replication(const Scenario& scenario, std::uint64_t rep_index);

/// Fraction of statistics strictly above c.
double exceedance_fraction(std::span<const double> statistics, double c);
/// sqrt(p(1-p)/N).
double binomial_stderr(double p, std::size_t reps) noexcept;

/// (1/N) sum 1{X_k > c} over N independent replications.
ScenarioResult estimate_probability(const Scenario& scenario, const RunOptions& options = {});

/// Re-evaluates a result at another threshold from its retained statistics.
ScenarioResult rethreshold(const ScenarioResult& result, double c);

struct SweepConfig {
  std::string preset;  // informational; empty for ad-hoc sweeps
  MatrixPair matrices = causal_pair(0.4);
  double alpha = 0.4;
  LawPair laws{};
  std::vector<double> rho_list{0.25, 0.35, 0.50, 0.75};
  std::vector<std::size_t> n_list{100, 250, 500, 1000, 2000};
  double c = 1.0;
  std::size_t reps = 200;
  EvalGridSpec grid{GridMode::CornerSubsample, 500};
  std::uint64_t seed = 20240601;

  /// Scenarios in output order: rho-major, then n.
  std::vector<Scenario> scenarios() const;
  void validate() const;
};

/// Named presets. "fig1-left": rho in {0.25,0.35,0.50,0.75},
/// n in {100,250,500,1000,2000,3500,5000}. "fig1-right": n = 50000 and rho
/// from 0.25 to 0.75 in steps of 0.05. Both use c = 1 and the uncentered
/// Exp(1) contamination (override laws for the centered variant); desk scale uses
/// N = 200 and M = 500, full scale N = 1000 and M = 1000.
SweepConfig sweep_preset(std::string_view name, bool full_scale = false);

/// One result per scenario, in scenario order regardless of worker count.
std::vector<ScenarioResult> run_sweep(const SweepConfig& config, const RunOptions& options = {});

inline constexpr std::string_view kSweepCsvHeader =
    "scenario_id,rho,beta,n,c,N,grid_mode,grid_points,estimate,stderr,seed,wall_ms";

/// Writes '#'-prefixed metadata lines, the header, then one row per result.
void write_sweep_csv(std::ostream& out, std::span<const ScenarioResult> results,
                     std::span<const std::string> metadata = {});
std::vector<ScenarioResult> read_sweep_csv(std::istream& in);
/// Metadata lines describing a sweep config (resolved settings and seed).
std::vector<std::string> sweep_metadata(const SweepConfig& config);

struct KEstimate {
  double k = 0.0;            // sup-grid |Gamma(A,B,nu)| * norm_c
  double k_direct = 0.0;     // sup-grid |F^A_beta - F^B_beta| / beta
  double check_beta = 0.005;
  double norm_c = 0.0;
  GridSup gamma_sup;

  /// k_direct / k; 1 when both vanish.
  double scale_ratio() const noexcept;
};

/// Slope K of ||F^A_beta - F^B_beta||_inf ~ K beta, from the first-order
/// coefficient and cross-checked by a direct difference at check_beta.
KEstimate estimate_K(const MixingMatrix2& a, const MixingMatrix2& b, const LawPair& laws = {},
                     const EvalGrid& grid = default_norm_grid(), double check_beta = 0.005);

/// n beyond which sqrt(n) K beta_n exceeds c: exp(log(c/K) / (1/2 - rho)).
/// Requires 0 < rho < 1/2, c > 0, K > 0.
double predict_threshold_n(double rho, double c, double k);

}  // namespace contica
