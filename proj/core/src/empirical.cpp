#include "contica/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace contica {

std::vector<Point2> draw_sample(const MixingMatrix2& a, double beta, std::size_t n, RngStream& rng,
                                const LawPair& laws) {
  if (n == 0) throw std::invalid_argument("draw_sample: n must be >= 1");
  const ContaminatedLaw law(beta, laws);
  std::vector<Point2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double e1 = law.sample(rng);
    const double e2 = law.sample(rng);
    out.push_back(a.apply(e1, e2));
  }
  return out;
}

namespace {

class Fenwick {
 public:
  explicit Fenwick(std::size_t size) : tree_(size + 1, 0) {}
  void add(std::size_t index) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }
  // Sum over [0, count).
  std::uint32_t prefix(std::size_t count) const {
    std::uint32_t s = 0;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<std::uint32_t> tree_;
};

}  // namespace

EmpiricalCdf::EmpiricalCdf(std::span<const Point2> sample) : sorted_(sample.begin(), sample.end()) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: sample must be nonempty");
  for (const Point2& p : sorted_) {
    if (!std::isfinite(p.x1) || !std::isfinite(p.x2)) {
      throw std::invalid_argument("EmpiricalCdf: sample coordinates must be finite");
    }
  }
  std::sort(sorted_.begin(), sorted_.end(), [](const Point2& l, const Point2& r) { return l.x1 < r.x1; });
  second_.reserve(sorted_.size());
  for (const Point2& p : sorted_) second_.push_back(p.x2);
  std::sort(second_.begin(), second_.end());
  second_.erase(std::unique(second_.begin(), second_.end()), second_.end());
}

std::vector<std::uint32_t> EmpiricalCdf::count_batch(std::span<const Point2> grid, bool strict) const {
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return grid[l].x1 < grid[r].x1; });

  Fenwick tree(second_.size());
  std::vector<std::uint32_t> counts(grid.size(), 0);
  std::size_t next = 0;
  for (std::size_t q : order) {
    const Point2 x = grid[q];
    while (next < sorted_.size() && (strict ? sorted_[next].x1 < x.x1 : sorted_[next].x1 <= x.x1)) {
      const auto rank = static_cast<std::size_t>(
          std::lower_bound(second_.begin(), second_.end(), sorted_[next].x2) - second_.begin());
      tree.add(rank);
      ++next;
    }
    const auto bound = strict ? std::lower_bound(second_.begin(), second_.end(), x.x2)
                              : std::upper_bound(second_.begin(), second_.end(), x.x2);
    counts[q] = tree.prefix(static_cast<std::size_t>(bound - second_.begin()));
  }
  return counts;
}

std::vector<double> EmpiricalCdf::eval_batch(std::span<const Point2> grid, bool strict) const {
  const std::vector<std::uint32_t> counts = count_batch(grid, strict);
  std::vector<double> out(counts.size());
  const double n = static_cast<double>(sorted_.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = static_cast<double>(counts[i]) / n;
  return out;
}

std::vector<std::uint32_t> count_dominated_naive(std::span<const Point2> sample,
                                                 std::span<const Point2> grid, bool strict) {
  std::vector<std::uint32_t> counts(grid.size(), 0);
  for (std::size_t q = 0; q < grid.size(); ++q) {
    for (const Point2& p : sample) {
      const bool in = strict ? (p.x1 < grid[q].x1 && p.x2 < grid[q].x2)
                             : (p.x1 <= grid[q].x1 && p.x2 <= grid[q].x2);
      counts[q] += in ? 1u : 0u;
    }
  }
  return counts;
}

std::string_view to_string(GridMode mode) noexcept {
  return mode == GridMode::CornerSubsample ? "corner-subsample" : "quantile-tensor";
}

GridMode parse_grid_mode(std::string_view text) {
  if (text == "corner-subsample" || text == "corner") return GridMode::CornerSubsample;
  if (text == "quantile-tensor" || text == "quantile") return GridMode::QuantileTensor;
  throw std::invalid_argument("unknown grid mode '" + std::string(text) + "'");
}

namespace {

std::pair<std::vector<double>, std::vector<double>> sorted_marginals(std::span<const Point2> sample) {
  std::vector<double> u(sample.size());
  std::vector<double> v(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    u[i] = sample[i].x1;
    v[i] = sample[i].x2;
  }
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  return {std::move(u), std::move(v)};
}

// M distinct integers from [0, total), ascending (Floyd's algorithm, or a
// selection scan when M is a large fraction of total).
std::vector<std::uint64_t> sample_without_replacement(std::uint64_t total, std::uint64_t m,
                                                      RngStream& rng) {
  std::vector<std::uint64_t> out;
  out.reserve(m);
  if (m * 4 >= total) {
    std::uint64_t needed = m;
    for (std::uint64_t k = 0; k < total && needed > 0; ++k) {
      if (rng.below(total - k) < needed) {
        out.push_back(k);
        --needed;
      }
    }
    return out;
  }
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  out.assign(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Point2> build_eval_grid(std::span<const Point2> sample, const EvalGridSpec& spec,
                                    RngStream& rng) {
  if (spec.points < 1) throw std::invalid_argument("evaluation grid needs M >= 1");
  if (sample.empty()) throw std::invalid_argument("evaluation grid needs a nonempty sample");
  const auto [u, v] = sorted_marginals(sample);
  const std::uint64_t n = sample.size();
  std::vector<Point2> grid;

  if (spec.mode == GridMode::CornerSubsample) {
    if (spec.points > n * n) throw std::invalid_argument("corner grid needs M <= n^2");
    const auto picks = sample_without_replacement(n * n, spec.points, rng);
    grid.reserve(picks.size());
    for (std::uint64_t k : picks) grid.push_back({u[k / n], v[k % n]});
    return grid;
  }

  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(spec.points))));
  const auto order_stat = [&](const std::vector<double>& xs, std::size_t k) {
    const auto idx = static_cast<std::size_t>((static_cast<double>(k) + 0.5) * static_cast<double>(n) /
                                              static_cast<double>(side));
    return xs[std::min<std::size_t>(idx, n - 1)];
  };
  grid.reserve(side * side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) grid.push_back({order_stat(u, i), order_stat(v, j)});
  }
  return grid;
}

std::vector<Point2> full_corner_grid(std::span<const Point2> sample) {
  const auto [u, v] = sorted_marginals(sample);
  std::vector<Point2> grid;
  grid.reserve(u.size() * v.size());
  for (double a : u) {
    for (double b : v) grid.push_back({a, b});
  }
  return grid;
}

double sup_stat(const EmpiricalCdf& ecdf, std::span<const Point2> grid, std::span<const double> target,
                std::optional<std::span<const double>> target_left) {
  if (grid.empty()) throw std::invalid_argument("sup_stat: grid must be nonempty");
  if (target.size() != grid.size() || (target_left && target_left->size() != grid.size())) {
    throw std::invalid_argument("sup_stat: target size must match grid size");
  }
  const std::vector<double> closed = ecdf.eval_batch(grid, false);
  const std::vector<double> open = ecdf.eval_batch(grid, true);
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double left = target_left ? (*target_left)[i] : target[i];
    best = std::max({best, std::abs(closed[i] - target[i]), std::abs(open[i] - left)});
  }
  return std::sqrt(static_cast<double>(ecdf.size())) * best;
}

double sup_stat(const EmpiricalCdf& ecdf, std::span<const Point2> grid,
                const std::function<double(Point2)>& target) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = target(grid[i]);
  return sup_stat(ecdf, grid, values);
}

}  // namespace contica
