#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "contica/empirical.hpp"
#include "contica/matrix.hpp"
#include "contica/montecarlo.hpp"

namespace contica {

/// Approximate draws of ||W||_inf for the F^A-Gaussian field W.
struct LimitLawSample {
  std::vector<double> draws;
  std::size_t n0 = 0;
  std::string method = "empirical-process";

  /// Fraction of draws > c.
  double survival(double c) const;
  /// Fraction of draws >= c.
  double survival_inclusive(double c) const;
  double stderr_at(double c) const;
};

struct LimitOptions {
  std::size_t n0 = 20000;
  std::size_t reps = 500;
  EvalGridSpec grid{GridMode::CornerSubsample, 500};
  std::uint64_t seed = 20240601;
  LawPair laws{};
};

/// N draws of sqrt(n0) ||F_n0 - F^A||_inf on the thinned grid with
/// uncontaminated errors, approximating the law of ||W||_inf.
LimitLawSample simulate_limit_sup(const MixingMatrix2& a, const LimitOptions& options,
                                  const RunOptions& run = {});

struct SandwichBounds {
  double lower = 0.0;
  double upper = 1.0;
};

/// (P(||W|| > c + 4pk norm_c), P(||W|| >= c - 4pk norm_c)) from the draws.
SandwichBounds sandwich_bounds(double k, double c, const LimitLawSample& limit, double norm_c,
                               int p = 2);

}  // namespace contica
