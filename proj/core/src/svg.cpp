#include "contica/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace contica {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

}  // namespace

std::vector<PlotSeries> series_from_results(std::span<const ScenarioResult> results, PlotAxis axis) {
  std::vector<PlotSeries> series;
  const auto find_or_add = [&](const std::string& label) -> PlotSeries& {
    for (PlotSeries& s : series) {
      if (s.label == label) return s;
    }
    series.push_back({label, {}, {}, {}});
    return series.back();
  };
  for (const ScenarioResult& r : results) {
    if (axis == PlotAxis::SampleSize) {
      PlotSeries& s = find_or_add("rho=" + tick_label(r.rho));
      s.x.push_back(static_cast<double>(r.n));
      s.y.push_back(r.estimate);
      s.err.push_back(r.stderr_);
    } else {
      PlotSeries& s = find_or_add("n=" + std::to_string(r.n));
      s.x.push_back(r.rho);
      s.y.push_back(r.estimate);
      s.err.push_back(r.stderr_);
    }
  }
  return series;
}

std::string render_svg(std::span<const PlotSeries> series, const AxesSpec& axes) {
  double x_lo = HUGE_VAL;
  double x_hi = -HUGE_VAL;
  bool any = false;
  for (const PlotSeries& s : series) {
    if (s.x.size() != s.y.size() || (!s.err.empty() && s.err.size() != s.y.size())) {
      throw std::invalid_argument("plot series '" + s.label + "' has mismatched lengths");
    }
    for (double x : s.x) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("render_svg: no data to plot");
  if (x_hi == x_lo) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  const double y_lo = axes.y_min;
  const double y_hi = axes.y_max > axes.y_min ? axes.y_max : axes.y_min + 1.0;

  const double left = 70.0;
  const double right = axes.width - 150.0;
  const double top = 40.0;
  const double bottom = axes.height - 55.0;
  const auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (right - left); };
  const auto py = [&](double y) {
    const double c = std::clamp(y, y_lo, y_hi);
    return bottom - (c - y_lo) / (y_hi - y_lo) * (bottom - top);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << axes.width << "\" height=\"" << axes.height
     << "\" viewBox=\"0 0 " << axes.width << ' ' << axes.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!axes.title.empty()) {
    os << "<text x=\"" << fmt((left + right) / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(axes.title) << "</text>\n";
  }
  os << "<g stroke=\"black\" fill=\"none\">\n";
  os << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(bottom) << "\" x2=\"" << fmt(right) << "\" y2=\""
     << fmt(bottom) << "\"/>\n";
  os << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(left) << "\" y2=\""
     << fmt(bottom) << "\"/>\n";
  os << "</g>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
    const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
    os << "<line x1=\"" << fmt(px(xv)) << "\" y1=\"" << fmt(bottom) << "\" x2=\"" << fmt(px(xv)) << "\" y2=\""
       << fmt(bottom + 5) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << fmt(bottom + 18) << "\" text-anchor=\"middle\">"
       << tick_label(xv) << "</text>\n";
    os << "<line x1=\"" << fmt(left - 5) << "\" y1=\"" << fmt(py(yv)) << "\" x2=\"" << fmt(left) << "\" y2=\""
       << fmt(py(yv)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(py(yv) + 4) << "\" text-anchor=\"end\">"
       << tick_label(yv) << "</text>\n";
  }
  os << "<text x=\"" << fmt((left + right) / 2) << "\" y=\"" << fmt(axes.height - 15.0)
     << "\" text-anchor=\"middle\">" << escape(axes.x_label) << "</text>\n";
  os << "<text x=\"18\" y=\"" << fmt((top + bottom) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << fmt((top + bottom) / 2) << ")\">" << escape(axes.y_label) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const PlotSeries& s = series[k];
    const char* color = kPalette[k % kPalette.size()];
    os << "<g class=\"series\" stroke=\"" << color << "\">\n";
    os << "<polyline fill=\"none\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) os << (i ? " " : "") << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i]));
    os << "\"/>\n";
    for (std::size_t i = 0; i < s.err.size(); ++i) {
      os << "<line x1=\"" << fmt(px(s.x[i])) << "\" y1=\"" << fmt(py(s.y[i] - s.err[i])) << "\" x2=\""
         << fmt(px(s.x[i])) << "\" y2=\"" << fmt(py(s.y[i] + s.err[i])) << "\"/>\n";
    }
    os << "</g>\n";
    const double ly = top + 10.0 + 18.0 * static_cast<double>(k);
    os << "<line x1=\"" << fmt(right + 15) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(right + 40) << "\" y2=\""
       << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << fmt(right + 46) << "\" y=\"" << fmt(ly + 4) << "\">" << escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace contica
