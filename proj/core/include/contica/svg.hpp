#pragma once

#include <span>
#include <string>
#include <vector>

#include "contica/montecarlo.hpp"

namespace contica {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> err;  // optional; same length as y when present
};

struct AxesSpec {
  std::string title;
  std::string x_label = "n";
  std::string y_label = "estimate";
  int width = 720;
  int height = 440;
  double y_min = 0.0;
  double y_max = 1.0;
};

enum class PlotAxis { SampleSize, Rho };

/// One series per rho (x = n) or a single series over rho (x = rho).
std::vector<PlotSeries> series_from_results(std::span<const ScenarioResult> results, PlotAxis axis);

/// Deterministic SVG line chart: one polyline per series, error bars from err.
/// Throws std::invalid_argument when there is no series with a point.
std::string render_svg(std::span<const PlotSeries> series, const AxesSpec& axes);

}  // namespace contica
