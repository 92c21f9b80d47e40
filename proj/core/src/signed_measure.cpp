#include "contica/signed_measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace contica {

NuMeasure::NuMeasure(LawPair laws) : laws_(laws), norm_c_(contamination_norm(laws)) {
  if (!(norm_c_ > 0.0)) throw std::invalid_argument("||xi - zeta||_inf must be positive");
}

double NuMeasure::cdf(double t) const {
  return (laws_.xi.cdf(t) - laws_.zeta.cdf(t)) / norm_c_;
}

EvalGrid::EvalGrid(std::vector<Point2> points, double step) : points_(std::move(points)), step_(step) {
  if (points_.empty()) throw std::invalid_argument("evaluation grid must be nonempty");
  for (const Point2& p : points_) {
    if (!std::isfinite(p.x1) || !std::isfinite(p.x2)) {
      throw std::invalid_argument("evaluation grid coordinates must be finite");
    }
  }
}

EvalGrid EvalGrid::tensor(double lo, double hi, std::size_t side) {
  if (side == 0 || !(hi >= lo)) throw std::invalid_argument("tensor grid needs side >= 1 and hi >= lo");
  std::vector<double> axis(side);
  const double step = side == 1 ? 0.0 : (hi - lo) / static_cast<double>(side - 1);
  for (std::size_t i = 0; i < side; ++i) axis[i] = lo + step * static_cast<double>(i);
  EvalGrid grid = tensor(axis, axis);
  grid.step_ = step;
  return grid;
}

EvalGrid EvalGrid::tensor(std::span<const double> axis1, std::span<const double> axis2) {
  std::vector<Point2> points;
  points.reserve(axis1.size() * axis2.size());
  for (double u : axis1) {
    for (double v : axis2) points.push_back({u, v});
  }
  return EvalGrid(std::move(points), 0.0);
}

EvalGrid EvalGrid::explicit_points(std::vector<Point2> points) {
  return EvalGrid(std::move(points), 0.0);
}

EvalGrid default_norm_grid() { return EvalGrid::tensor(-6.0, 6.0, 101); }

namespace {

struct PureValues {
  double zz, xz, zx, xx;
};

PureValues pure_values(const MixingMatrix2& a, Point2 x, const LawPair& laws, const QuadConfig& config) {
  return {pure_pushforward_cdf(a, {laws.zeta, laws.zeta}, x, config),
          pure_pushforward_cdf(a, {laws.xi, laws.zeta}, x, config),
          pure_pushforward_cdf(a, {laws.zeta, laws.xi}, x, config),
          pure_pushforward_cdf(a, {laws.xi, laws.xi}, x, config)};
}

}  // namespace

std::array<double, 3> gamma_all_at(const MixingMatrix2& a, Point2 x, const NuMeasure& nu,
                                   const QuadConfig& config) {
  const PureValues v = pure_values(a, x, nu.laws(), config);
  const double c = nu.norm_c();
  return {v.zz, ((v.xz - v.zz) + (v.zx - v.zz)) / c, (v.xx - v.xz - v.zx + v.zz) / (c * c)};
}

double gamma_k_at(const MixingMatrix2& a, int k, Point2 x, const NuMeasure& nu,
                  const QuadConfig& config) {
  if (k < 0 || k > 2) throw std::invalid_argument("gamma order must be 0, 1 or 2 for p = 2");
  const LawPair& laws = nu.laws();
  const double c = nu.norm_c();
  switch (k) {
    case 0: return pure_pushforward_cdf(a, {laws.zeta, laws.zeta}, x, config);
    case 1: {
      const double zz = pure_pushforward_cdf(a, {laws.zeta, laws.zeta}, x, config);
      const double xz = pure_pushforward_cdf(a, {laws.xi, laws.zeta}, x, config);
      const double zx = pure_pushforward_cdf(a, {laws.zeta, laws.xi}, x, config);
      return ((xz - zz) + (zx - zz)) / c;
    }
    default: return gamma_all_at(a, x, nu, config)[2];
  }
}

double gamma_term_at(const MixingMatrix2& a, bool nu_first, bool nu_second, Point2 x,
                     const NuMeasure& nu, const QuadConfig& config) {
  const LawPair& laws = nu.laws();
  // mu = zeta contributes (zeta, +1); mu = nu contributes (xi, +1/c) and (zeta, -1/c).
  const auto factor = [&](bool is_nu) {
    std::vector<std::pair<ComponentLaw, double>> f;
    if (is_nu) {
      f.emplace_back(laws.xi, 1.0 / nu.norm_c());
      f.emplace_back(laws.zeta, -1.0 / nu.norm_c());
    } else {
      f.emplace_back(laws.zeta, 1.0);
    }
    return f;
  };
  double total = 0.0;
  for (const auto& [l1, w1] : factor(nu_first)) {
    for (const auto& [l2, w2] : factor(nu_second)) {
      total += w1 * w2 * pure_pushforward_cdf(a, {l1, l2}, x, config);
    }
  }
  return total;
}

double polynomial_reconstruct(const MixingMatrix2& a, double beta, Point2 x, const NuMeasure& nu,
                              const QuadConfig& config) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
  const auto g = gamma_all_at(a, x, nu, config);
  const double s = beta * nu.norm_c();
  return g[0] + s * g[1] + s * s * g[2];
}

double gamma_diff_at(const MixingMatrix2& a, const MixingMatrix2& b, Point2 x, const NuMeasure& nu,
                     const QuadConfig& config) {
  return gamma_k_at(a, 1, x, nu, config) - gamma_k_at(b, 1, x, nu, config);
}

double sup_on_grid(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("sup_on_grid: empty grid");
  double best = 0.0;
  for (double v : values) best = std::max(best, std::abs(v));
  return best;
}

GridSup estimate_sup_norm(const std::function<double(Point2)>& field, const EvalGrid& grid,
                          bool refine) {
  GridSup best{-1.0, {}};
  for (const Point2& p : grid.points()) {
    const double v = std::abs(field(p));
    if (v > best.value) best = {v, p};
  }
  if (!refine) return best;

  double step = grid.step() > 0.0 ? grid.step() : 0.1;
  constexpr std::array<std::pair<double, double>, 8> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                                            {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  int evaluations = 0;
  while (step > 1e-6 && evaluations < 2000) {
    bool moved = false;
    for (const auto& [d1, d2] : dirs) {
      const Point2 q{best.argmax.x1 + d1 * step, best.argmax.x2 + d2 * step};
      const double v = std::abs(field(q));
      ++evaluations;
      if (v > best.value) {
        best = {v, q};
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

}  // namespace contica
