#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "contica/distributions.hpp"
#include "contica/matrix.hpp"
#include "contica/quadrature.hpp"

namespace contica {

/// One component law per error coordinate.
struct PureProductSpec {
  ComponentLaw first;
  ComponentLaw second;

  PureProductSpec swapped() const { return {second, first}; }
  friend constexpr bool operator==(const PureProductSpec&, const PureProductSpec&) = default;
};

/// P(A e <= x) for e with independent coordinates distributed per spec.
///
/// Gaussian-Gaussian pairs use bvn_cdf with covariance A*A^t. Every other pair
/// is the 1-D integral over e1 of f1(e1) * P(e2 in J(e1)), where J(e1) is the
/// interval cut out of the e2-line by the two half-plane constraints. The
/// integration range is split at every point where J changes shape, where J
/// hits a kink of the second law, and at the support edge of the first law.
double pure_pushforward_cdf(const MixingMatrix2& a, const PureProductSpec& spec, Point2 x,
                            const QuadConfig& config = {});

/// Same as pure_pushforward_cdf but returns the quadrature diagnostics
/// (value only for the Gaussian-Gaussian path).
QuadResult pure_pushforward_cdf_detailed(const MixingMatrix2& a, const PureProductSpec& spec,
                                         Point2 x, const QuadConfig& config = {});

/// Binomial weights beta^|alpha| (1-beta)^(2-|alpha|) indexed by alpha as
/// {zeta zeta, xi zeta, zeta xi, xi xi}.
std::array<double, 4> mixture_weights(double beta);

/// F^A_beta(x): the CDF of A e with e iid P_e(beta) coordinates.
double mixture_pushforward_cdf(const MixingMatrix2& a, double beta, Point2 x,
                               const LawPair& laws = {}, const QuadConfig& config = {});

/// Evaluates F^A_beta on many points; the point set is processed in order.
void mixture_pushforward_cdf_batch(const MixingMatrix2& a, double beta,
                                   std::span<const Point2> points, std::span<double> out,
                                   const LawPair& laws = {}, const QuadConfig& config = {});

/// Reusable F^A_beta target. Skips pure terms whose weight is zero.
class MixtureCdf {
 public:
  MixtureCdf(MixingMatrix2 a, double beta, LawPair laws = {}, QuadConfig config = {});

  double operator()(Point2 x) const;
  void evaluate(std::span<const Point2> points, std::span<double> out) const;

  const MixingMatrix2& matrix() const noexcept { return a_; }
  double beta() const noexcept { return beta_; }
  const LawPair& laws() const noexcept { return laws_; }

 private:
  MixingMatrix2 a_;
  double beta_;
  LawPair laws_;
  QuadConfig config_;
  std::array<double, 4> weights_;
};

class RngStream;

/// Fraction of n_mc simulated A e that fall in the lower orthant at x.
double oracle_cdf_mc(const MixingMatrix2& a, double beta, Point2 x, std::uint64_t n_mc,
                     RngStream& rng, const LawPair& laws = {});

}  // namespace contica
