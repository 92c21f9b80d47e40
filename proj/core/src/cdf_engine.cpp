#include "contica/cdf_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "contica/bvn.hpp"
#include "contica/rng.hpp"

namespace contica {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integration range for a coordinate law: the support edge (or mean - R) up to
// a point where the remaining tail mass is far below the quadrature tolerance.
std::pair<double, double> truncated_range(ComponentLaw law, double radius) {
  if (law.is_normal()) return {-radius, radius};
  const double edge = law.support_lower();
  // Exp(1) tail beyond edge + 2R is e^{-2R}; a single R would leave ~2e-9.
  return {edge, edge + 2.0 * radius};
}

// Points spread over the bulk of a law, in its own units. A constraint whose
// e2 coefficient is small next to its e1 coefficient maps these onto a narrow
// e1 window, and the e2-mass moves through all of it there.
std::vector<double> landmarks(ComponentLaw law) {
  if (law.is_normal()) return {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0};
  std::vector<double> out;
  for (double t : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 24.0, 32.0}) out.push_back(law.support_lower() + t);
  return out;
}

constexpr double kSteepScale = 2.0;

QuadResult gaussian_pair(const MixingMatrix2& a, Point2 x) {
  const Gram2 g = a.gram();
  const double s1 = std::sqrt(g.s11);
  const double s2 = std::sqrt(g.s22);
  const double rho = std::clamp(g.s12 / (s1 * s2), -1.0 + 1e-16, 1.0 - 1e-16);
  return {bvn_cdf(x.x1 / s1, x.x2 / s2, rho), 0.0, 0, true};
}

}  // namespace

QuadResult pure_pushforward_cdf_detailed(const MixingMatrix2& a, const PureProductSpec& spec,
                                         Point2 x, const QuadConfig& config) {
  if (std::isnan(x.x1) || std::isnan(x.x2)) throw std::invalid_argument("CDF point has NaN coordinate");
  if (x.x1 == -kInf || x.x2 == -kInf) return {0.0, 0.0, 0, true};
  if (spec.first.is_normal() && spec.second.is_normal()) return gaussian_pair(a, x);

  const ComponentLaw first = spec.first;
  const ComponentLaw second = spec.second;
  const std::array<double, 2> xs{x.x1, x.x2};
  const std::array<double, 2> c1{a.a11(), a.a21()};  // coefficients of e1
  const std::array<double, 2> c2{a.a12(), a.a22()};  // coefficients of e2

  auto [lo, hi] = truncated_range(first, config.truncation_radius);

  // Constraints free of e2 restrict e1 directly.
  for (int i = 0; i < 2; ++i) {
    if (c2[i] != 0.0) continue;
    if (xs[i] == kInf) continue;
    const double bound = xs[i] / c1[i];  // c1[i] != 0 because det != 0
    if (c1[i] > 0.0) hi = std::min(hi, bound);
    else lo = std::max(lo, bound);
  }
  if (!(hi > lo)) return {0.0, 0.0, 0, true};

  const auto e2_mass = [&](double e1) {
    double low = -kInf;
    double high = kInf;
    for (int i = 0; i < 2; ++i) {
      if (c2[i] == 0.0 || xs[i] == kInf) continue;
      const double bound = (xs[i] - c1[i] * e1) / c2[i];
      if (c2[i] > 0.0) high = std::min(high, bound);
      else low = std::max(low, bound);
    }
    if (!(high > low)) return 0.0;
    return second.cdf_extended(high) - second.cdf_extended(low);
  };
  const auto integrand = [&](double e1) { return first.density(e1) * e2_mass(e1); };

  std::vector<double> breaks{lo, hi};
  const auto add_break = [&](double e1) {
    if (std::isfinite(e1) && e1 > lo && e1 < hi) breaks.push_back(e1);
  };
  if (xs[0] != kInf && xs[1] != kInf && c2[0] != 0.0 && c2[1] != 0.0) {
    // The two e2-bounds cross where e = A^{-1} x.
    add_break((xs[0] * a.a22() - xs[1] * a.a12()) / a.determinant());
  }
  for (double kink : second.kinks()) {
    for (int i = 0; i < 2; ++i) {
      if (c2[i] == 0.0 || c1[i] == 0.0 || xs[i] == kInf) continue;
      add_break((xs[i] - c2[i] * kink) / c1[i]);
    }
  }
  for (double kink : first.kinks()) add_break(kink);
  for (int i = 0; i < 2; ++i) {
    if (c2[i] == 0.0 || c1[i] == 0.0 || xs[i] == kInf) continue;
    if (std::abs(c2[i] / c1[i]) >= kSteepScale) continue;
    for (double t : landmarks(second)) add_break((xs[i] - c2[i] * t) / c1[i]);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  QuadResult r = integrate_adaptive(integrand, breaks, config.abs_tol, config.max_subdivisions);
  r.value = std::clamp(r.value, 0.0, 1.0);
  return r;
}

double pure_pushforward_cdf(const MixingMatrix2& a, const PureProductSpec& spec, Point2 x,
                            const QuadConfig& config) {
  return pure_pushforward_cdf_detailed(a, spec, x, config).value;
}

std::array<double, 4> mixture_weights(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
  const double q = 1.0 - beta;
  return {q * q, beta * q, q * beta, beta * beta};
}

MixtureCdf::MixtureCdf(MixingMatrix2 a, double beta, LawPair laws, QuadConfig config)
    : a_(a), beta_(beta), laws_(laws), config_(config), weights_(mixture_weights(beta)) {}

double MixtureCdf::operator()(Point2 x) const {
  const std::array<PureProductSpec, 4> specs{
      PureProductSpec{laws_.zeta, laws_.zeta}, PureProductSpec{laws_.xi, laws_.zeta},
      PureProductSpec{laws_.zeta, laws_.xi}, PureProductSpec{laws_.xi, laws_.xi}};
  double total = 0.0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (weights_[i] == 0.0) continue;
    total += weights_[i] * pure_pushforward_cdf(a_, specs[i], x, config_);
  }
  return std::clamp(total, 0.0, 1.0);
}

void MixtureCdf::evaluate(std::span<const Point2> points, std::span<double> out) const {
  if (out.size() != points.size()) throw std::invalid_argument("output span size mismatch");
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = (*this)(points[i]);
}

double mixture_pushforward_cdf(const MixingMatrix2& a, double beta, Point2 x, const LawPair& laws,
                               const QuadConfig& config) {
  return MixtureCdf(a, beta, laws, config)(x);
}

void mixture_pushforward_cdf_batch(const MixingMatrix2& a, double beta,
                                   std::span<const Point2> points, std::span<double> out,
                                   const LawPair& laws, const QuadConfig& config) {
  MixtureCdf(a, beta, laws, config).evaluate(points, out);
}

double oracle_cdf_mc(const MixingMatrix2& a, double beta, Point2 x, std::uint64_t n_mc,
                     RngStream& rng, const LawPair& laws) {
  if (n_mc == 0) throw std::invalid_argument("oracle_cdf_mc: n_mc must be >= 1");
  const ContaminatedLaw law(beta, laws);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n_mc; ++i) {
    const double e1 = law.sample(rng);
    const double e2 = law.sample(rng);
    const Point2 y = a.apply(e1, e2);
    if (y.x1 <= x.x1 && y.x2 <= x.x2) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n_mc);
}

}  // namespace contica
