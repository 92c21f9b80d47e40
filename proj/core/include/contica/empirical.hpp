#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "contica/distributions.hpp"
#include "contica/matrix.hpp"

namespace contica {

/// n iid draws of A e; coordinates of e iid P_e(beta).
std::vector<Point2> draw_sample(const MixingMatrix2& a, double beta, std::size_t n,
                                RngStream& rng, const LawPair& laws = {});

/// Empirical CDF of a 2-D sample with batched dominance counting. Immutable
/// after construction.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::span<const Point2> sample);

  std::size_t size() const noexcept { return sorted_.size(); }
  const std::vector<Point2>& points_by_first() const noexcept { return sorted_; }

  /// #{i : X_i <= x componentwise} for every x (strict: X_i < x componentwise).
  /// Offline sweep: sort queries, insert sample points into a Fenwick tree
  /// over ranks of the second coordinate. O((n + M) log(n + M)).
  std::vector<std::uint32_t> count_batch(std::span<const Point2> grid, bool strict = false) const;

  /// F_n(x) (or the left limit F_n(x-) when strict) for every x.
  std::vector<double> eval_batch(std::span<const Point2> grid, bool strict = false) const;

 private:
  std::vector<Point2> sorted_;   // by first coordinate
  std::vector<double> second_;   // sorted second coordinates
};

/// Naive O(nM) dominance count; test oracle and fallback for tiny inputs.
std::vector<std::uint32_t> count_dominated_naive(std::span<const Point2> sample,
                                                 std::span<const Point2> grid, bool strict);

enum class GridMode { CornerSubsample, QuantileTensor };

std::string_view to_string(GridMode mode) noexcept;
GridMode parse_grid_mode(std::string_view text);

struct EvalGridSpec {
  GridMode mode = GridMode::CornerSubsample;
  std::size_t points = 1000;
};

/// Evaluation points for the sup statistic.
///  corner-subsample: M distinct corners (x_i^(1), x_j^(2)) drawn uniformly
///    without replacement from the n^2 sample-coordinate pairs (all of them
///    when M = n^2), in (i, j) order of the first-coordinate ranks.
///  quantile-tensor: a ceil(sqrt(M))^2 tensor grid of marginal order statistics.
std::vector<Point2> build_eval_grid(std::span<const Point2> sample, const EvalGridSpec& spec,
                                    RngStream& rng);

/// All n^2 corners; sup over them (both sides) is the exact Kolmogorov statistic
/// on the sample-coordinate lattice.
std::vector<Point2> full_corner_grid(std::span<const Point2> sample);

/// sqrt(n) * max_x max(|F_n(x) - G(x)|, |F_n(x-) - G(x-)|). target_left may be
/// omitted for continuous targets, in which case G(x-) = G(x).
double sup_stat(const EmpiricalCdf& ecdf, std::span<const Point2> grid,
                std::span<const double> target, std::optional<std::span<const double>> target_left = {});

/// Convenience overload evaluating a continuous target callable on the grid.
double sup_stat(const EmpiricalCdf& ecdf, std::span<const Point2> grid,
                const std::function<double(Point2)>& target);

}  // namespace contica
