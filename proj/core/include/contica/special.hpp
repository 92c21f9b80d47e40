#pragma once

#include <cmath>
#include <numbers>

namespace contica {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

/// Standard normal CDF. Accepts +-inf.
inline double normal_cdf(double t) noexcept { return 0.5 * std::erfc(-t * kInvSqrt2); }

inline double normal_pdf(double t) noexcept { return kInvSqrt2Pi * std::exp(-0.5 * t * t); }

}  // namespace contica
