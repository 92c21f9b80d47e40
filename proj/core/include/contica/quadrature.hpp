#pragma once

#include <functional>
#include <span>

namespace contica {

struct QuadConfig {
  double abs_tol = 1e-10;
  int max_subdivisions = 2000;
  /// Integration range for light-tailed laws, in standard units from the mean.
  double truncation_radius = 20.0;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod integration of f over the finite
/// range spanned by the sorted breakpoints. Each breakpoint starts a separate
/// panel, so kinks at breakpoints cost nothing. The interval with the largest
/// error estimate is bisected until the summed estimate is <= abs_tol or
/// max_subdivisions bisections have been spent.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              std::span<const double> breakpoints, double abs_tol,
                              int max_subdivisions);

}  // namespace contica
