#include "contica/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "contica/special.hpp"

namespace contica {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double exp_cdf(double s) noexcept { return s <= 0.0 ? 0.0 : -std::expm1(-s); }

}  // namespace

std::string_view to_string(ComponentKind kind) noexcept {
  switch (kind) {
    case ComponentKind::StandardNormal: return "normal";
    case ComponentKind::CenteredExponential: return "centered-exponential";
    case ComponentKind::Exponential: return "exponential";
  }
  return "unknown";
}

ComponentKind parse_component_kind(std::string_view name) {
  if (name == "normal") return ComponentKind::StandardNormal;
  if (name == "centered-exponential") return ComponentKind::CenteredExponential;
  if (name == "exponential") return ComponentKind::Exponential;
  throw std::invalid_argument("unknown component law '" + std::string(name) + "'");
}

double ComponentLaw::cdf(double t) const {
  if (!std::isfinite(t)) throw std::invalid_argument("CDF argument must be finite");
  return cdf_extended(t);
}

double ComponentLaw::cdf_extended(double t) const noexcept {
  switch (kind_) {
    case ComponentKind::StandardNormal: return normal_cdf(t);
    case ComponentKind::CenteredExponential: return t == kInf ? 1.0 : exp_cdf(t + 1.0);
    case ComponentKind::Exponential: return t == kInf ? 1.0 : exp_cdf(t);
  }
  return 0.0;
}

double ComponentLaw::density(double t) const noexcept {
  switch (kind_) {
    case ComponentKind::StandardNormal: return normal_pdf(t);
    case ComponentKind::CenteredExponential: return t < -1.0 ? 0.0 : std::exp(-(t + 1.0));
    case ComponentKind::Exponential: return t < 0.0 ? 0.0 : std::exp(-t);
  }
  return 0.0;
}

double ComponentLaw::sample(RngStream& rng) const {
  switch (kind_) {
    case ComponentKind::StandardNormal: return rng.normal();
    case ComponentKind::CenteredExponential: return rng.exponential() - 1.0;
    case ComponentKind::Exponential: return rng.exponential();
  }
  return 0.0;
}

double ComponentLaw::support_lower() const noexcept {
  switch (kind_) {
    case ComponentKind::StandardNormal: return -kInf;
    case ComponentKind::CenteredExponential: return -1.0;
    case ComponentKind::Exponential: return 0.0;
  }
  return -kInf;
}

std::vector<double> ComponentLaw::kinks() const {
  if (is_normal()) return {};
  return {support_lower()};
}

ContaminatedLaw::ContaminatedLaw(double beta, LawPair laws) : beta_(beta), laws_(laws) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
  if (laws.xi == laws.zeta) throw std::invalid_argument("xi and zeta must differ");
}

double ContaminatedLaw::cdf(double t) const {
  if (!std::isfinite(t)) throw std::invalid_argument("CDF argument must be finite");
  return cdf_extended(t);
}

double ContaminatedLaw::cdf_extended(double t) const noexcept {
  return beta_ * laws_.xi.cdf_extended(t) + (1.0 - beta_) * laws_.zeta.cdf_extended(t);
}

double ContaminatedLaw::sample(RngStream& rng) const {
  const bool from_xi = rng.uniform() < beta_;
  return from_xi ? laws_.xi.sample(rng) : laws_.zeta.sample(rng);
}

std::vector<double> ContaminatedLaw::kinks() const {
  std::vector<double> k = laws_.xi.kinks();
  for (double v : laws_.zeta.kinks()) k.push_back(v);
  return k;
}

double sup_abs_univariate(const std::function<double(double)>& f,
                          std::span<const double> candidates,
                          const UnivariateSupOptions& options) {
  if (options.grid_points < 3 || !(options.upper > options.lower)) {
    throw std::invalid_argument("sup_abs_univariate: need >= 3 points on a proper interval");
  }
  const std::size_t m = options.grid_points;
  const double h = (options.upper - options.lower) / static_cast<double>(m - 1);
  std::vector<double> values(m);
  for (std::size_t i = 0; i < m; ++i) {
    values[i] = std::abs(f(options.lower + h * static_cast<double>(i)));
  }

  double best = 0.0;
  for (double c : candidates) {
    if (std::isfinite(c)) best = std::max(best, std::abs(f(c)));
  }

  // Refine the strongest interior local maxima.
  std::vector<std::pair<double, std::size_t>> peaks;
  for (std::size_t i = 0; i < m; ++i) {
    best = std::max(best, values[i]);
    const bool left_ok = i == 0 || values[i] >= values[i - 1];
    const bool right_ok = i + 1 == m || values[i] >= values[i + 1];
    if (left_ok && right_ok) peaks.emplace_back(values[i], i);
  }
  std::sort(peaks.begin(), peaks.end(), std::greater<>());
  if (peaks.size() > 8) peaks.resize(8);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto g = [&](double t) { return std::abs(f(t)); };
  for (const auto& [value, i] : peaks) {
    double lo = options.lower + h * static_cast<double>(i == 0 ? 0 : i - 1);
    double hi = options.lower + h * static_cast<double>(std::min(i + 1, m - 1));
    double c1 = hi - inv_phi * (hi - lo);
    double c2 = lo + inv_phi * (hi - lo);
    double g1 = g(c1);
    double g2 = g(c2);
    for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
      if (g1 > g2) {
        hi = c2;
        c2 = c1;
        g2 = g1;
        c1 = hi - inv_phi * (hi - lo);
        g1 = g(c1);
      } else {
        lo = c1;
        c1 = c2;
        g1 = g2;
        c2 = lo + inv_phi * (hi - lo);
        g2 = g(c2);
      }
    }
    best = std::max({best, g1, g2});
  }
  return best;
}

double contamination_norm(const LawPair& laws) {
  if (laws.xi == laws.zeta) throw std::invalid_argument("xi and zeta must differ");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, double> cache;
  const std::pair<int, int> key{static_cast<int>(laws.xi.kind()), static_cast<int>(laws.zeta.kind())};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double value = kolmogorov_distance(laws.xi, laws.zeta);
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

}  // namespace contica
