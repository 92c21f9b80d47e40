#include "contica/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace contica {

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const noexcept { return error < other.error; }
};

Panel gk21(const std::function<double(double)>& f, double a, double b) {
  double error = 0.0;
  // max_depth = 0: a single Gauss-Kronrod 21 evaluation with its error estimate.
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 0, 0.0, &error);
  return {a, b, value, error};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              std::span<const double> breakpoints, double abs_tol,
                              int max_subdivisions) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate_adaptive: abs_tol must be > 0");
  if (breakpoints.size() < 2) return {};
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i]) || (i > 0 && breakpoints[i] < breakpoints[i - 1])) {
      throw std::invalid_argument("integrate_adaptive: breakpoints must be finite and sorted");
    }
  }

  std::priority_queue<Panel> panels;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] <= breakpoints[i - 1]) continue;
    Panel p = gk21(f, breakpoints[i - 1], breakpoints[i]);
    total += p.value;
    error += p.error;
    panels.push(p);
  }

  int used = 0;
  while (error > abs_tol && used < max_subdivisions && !panels.empty()) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted at machine precision
    panels.pop();
    const Panel left = gk21(f, worst.a, mid);
    const Panel right = gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++used;
  }

  // Re-sum to shed the drift from incremental updates.
  double value = 0.0;
  double err = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {value, err, used, err <= abs_tol};
}

}  // namespace contica
