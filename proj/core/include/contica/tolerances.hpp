#pragma once

// Thresholds shared by the verification checks and the acceptance suite.

namespace contica::tolerance {

inline constexpr double kNormalCdfAbs = 1e-12;
inline constexpr double kBvnAbs = 1e-10;
inline constexpr double kQuadAbs = 1e-10;
inline constexpr double kUnivariateSupAbs = 1e-7;

/// mixture CDF vs independent 2-D quadrature.
inline constexpr double kOracleQuadAbs = 1e-7;
/// mixture CDF vs Monte Carlo, in binomial standard deviations.
inline constexpr double kOracleMcSigmas = 4.0;

inline constexpr double kReconstructAbs = 1e-8;
inline constexpr double kPermutationAbs = 1e-9;

/// Halving beta must scale sup|D_beta - Gamma_1| by a factor in this window.
inline constexpr double kRateRatioLo = 0.35;
inline constexpr double kRateRatioHi = 0.65;
inline constexpr double kRateBeta = 0.02;

inline constexpr double kGamma1Bound = 4.0;       // 2p, p = 2
inline constexpr double kSingleTermBound = 2.0;   // ||nu||_inf * ||zeta||_tv * 2

inline constexpr double kGaussianEqualityAbs = 1e-7;
inline constexpr double kNonGaussianSeparation = 1e-4;
inline constexpr double kNonGaussianBeta = 0.5;

inline constexpr double kLinearityRel = 0.05;
inline constexpr double kLinearityBetaHi = 0.01;
inline constexpr double kLinearityBetaLo = 0.005;

inline constexpr double kContaminationLinearityAbs = 1e-6;
inline constexpr double kDirectionAbs = 1e-9;

inline constexpr double kFig1SlowRateFloor = 0.9;
inline constexpr double kJointSigmas = 3.0;

}  // namespace contica::tolerance
