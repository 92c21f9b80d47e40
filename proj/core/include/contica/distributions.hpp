#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contica/rng.hpp"

namespace contica {

/// Mean-zero building blocks plus the uncentered exponential for the literal
/// "standard exponential" reading.
enum class ComponentKind {
  StandardNormal,
  CenteredExponential,  // Exp(1) - 1, support [-1, inf)
  Exponential,          // Exp(1), support [0, inf); not mean zero
};

std::string_view to_string(ComponentKind kind) noexcept;

class ComponentLaw {
 public:
  constexpr ComponentLaw() = default;
  constexpr explicit ComponentLaw(ComponentKind kind) : kind_(kind) {}

  static constexpr ComponentLaw normal() { return ComponentLaw{ComponentKind::StandardNormal}; }
  static constexpr ComponentLaw centered_exponential() {
    return ComponentLaw{ComponentKind::CenteredExponential};
  }
  static constexpr ComponentLaw exponential() { return ComponentLaw{ComponentKind::Exponential}; }

  constexpr ComponentKind kind() const noexcept { return kind_; }
  constexpr bool is_normal() const noexcept { return kind_ == ComponentKind::StandardNormal; }

  /// CDF at a finite t; throws std::invalid_argument otherwise.
  double cdf(double t) const;
  /// CDF extended to the closed real line (cdf(-inf) = 0, cdf(inf) = 1).
  double cdf_extended(double t) const noexcept;
  /// Lebesgue density; used internally by the quadrature paths.
  double density(double t) const noexcept;
  double sample(RngStream& rng) const;

  /// Left end of the support (-inf for the normal law).
  double support_lower() const noexcept;
  /// Points at which the CDF fails to be smooth.
  std::vector<double> kinks() const;

  friend constexpr bool operator==(ComponentLaw, ComponentLaw) = default;

 private:
  ComponentKind kind_ = ComponentKind::StandardNormal;
};

/// The (xi, zeta) pair defining the contamination family. zeta is the base law.
struct LawPair {
  ComponentLaw xi = ComponentLaw::centered_exponential();
  ComponentLaw zeta = ComponentLaw::normal();

  /// Default pair, or the uncentered exponential contamination when center_xi is false.
  static LawPair standard(bool center_xi = true) {
    return {center_xi ? ComponentLaw::centered_exponential() : ComponentLaw::exponential(),
            ComponentLaw::normal()};
  }
  friend constexpr bool operator==(const LawPair&, const LawPair&) = default;
};

/// P_e(beta) = beta*xi + (1-beta)*zeta.
class ContaminatedLaw {
 public:
  ContaminatedLaw(double beta, LawPair laws = {});

  double beta() const noexcept { return beta_; }
  const LawPair& laws() const noexcept { return laws_; }

  double cdf(double t) const;
  double cdf_extended(double t) const noexcept;
  /// Latent Bernoulli(beta) picks xi, otherwise zeta. Always consumes one uniform.
  double sample(RngStream& rng) const;
  std::vector<double> kinks() const;

 private:
  double beta_;
  LawPair laws_;
};

struct UnivariateSupOptions {
  double lower = -20.0;
  double upper = 20.0;
  std::size_t grid_points = 200001;
};

/// sup_t |f(t)| by dense grid scan, golden-section refinement around the
/// best cells and explicit candidate points (kinks).
double sup_abs_univariate(const std::function<double(double)>& f,
                          std::span<const double> candidates,
                          const UnivariateSupOptions& options = {});

/// Kolmogorov distance sup_t |F_a(t) - F_b(t)| between two univariate laws.
template <class LawA, class LawB>
double kolmogorov_distance(const LawA& a, const LawB& b, const UnivariateSupOptions& options = {}) {
  std::vector<double> candidates = a.kinks();
  for (double k : b.kinks()) candidates.push_back(k);
  return sup_abs_univariate(
      [&](double t) { return a.cdf_extended(t) - b.cdf_extended(t); }, candidates, options);
}

/// ||xi - zeta||_inf for the pair.
double contamination_norm(const LawPair& laws);

ComponentKind parse_component_kind(std::string_view name);

}  // namespace contica
