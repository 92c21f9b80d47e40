#pragma once

#include <functional>
#include <span>
#include <vector>

#include "contica/cdf_engine.hpp"

namespace contica {

/// nu = (xi - zeta) / ||xi - zeta||_inf, the normalized contamination direction.
class NuMeasure {
 public:
  explicit NuMeasure(LawPair laws = {});

  const LawPair& laws() const noexcept { return laws_; }
  double norm_c() const noexcept { return norm_c_; }
  /// nu((-inf, t]).
  double cdf(double t) const;

 private:
  LawPair laws_;
  double norm_c_;
};

/// Tensor grid [lo,hi]^2 with `side` points per axis, or an explicit list.
class EvalGrid {
 public:
  static EvalGrid tensor(double lo, double hi, std::size_t side);
  static EvalGrid tensor(std::span<const double> axis1, std::span<const double> axis2);
  static EvalGrid explicit_points(std::vector<Point2> points);

  std::span<const Point2> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  /// Spacing of the tensor axes (0 for explicit grids); seeds local refinement.
  double step() const noexcept { return step_; }

 private:
  EvalGrid(std::vector<Point2> points, double step);
  std::vector<Point2> points_;
  double step_ = 0.0;
};

/// Default norm-estimation grid: 101x101 on [-6,6]^2.
EvalGrid default_norm_grid();

/// Order-k coefficient measure Gamma_k(A) of the expansion
/// L_A(P_e(beta)^{x2}) = sum_k (beta*norm_c)^k Gamma_k(A), evaluated on I_x.
/// Every nu factor is expanded as (xi - zeta)/norm_c so each term is a
/// combination of pure product pushforwards.
double gamma_k_at(const MixingMatrix2& a, int k, Point2 x, const NuMeasure& nu = NuMeasure{},
                  const QuadConfig& config = {});

/// Gamma_0, Gamma_1, Gamma_2 at x from one set of pure evaluations.
std::array<double, 3> gamma_all_at(const MixingMatrix2& a, Point2 x,
                                   const NuMeasure& nu = NuMeasure{},
                                   const QuadConfig& config = {});

/// A single placement L_A(mu_1 x mu_2)(I_x) with mu_i in {zeta, nu} selected
/// by nu_first / nu_second.
double gamma_term_at(const MixingMatrix2& a, bool nu_first, bool nu_second, Point2 x,
                     const NuMeasure& nu = NuMeasure{}, const QuadConfig& config = {});

/// sum_k beta^k norm_c^k Gamma_k(A)(I_x).
double polynomial_reconstruct(const MixingMatrix2& a, double beta, Point2 x,
                              const NuMeasure& nu = NuMeasure{}, const QuadConfig& config = {});

/// Gamma(A,B,nu)(I_x) = Gamma_1(A)(I_x) - Gamma_1(B)(I_x).
double gamma_diff_at(const MixingMatrix2& a, const MixingMatrix2& b, Point2 x,
                     const NuMeasure& nu = NuMeasure{}, const QuadConfig& config = {});

/// max |v|; throws std::invalid_argument on an empty range.
double sup_on_grid(std::span<const double> values);

struct GridSup {
  double value = 0.0;  // lower bound on the sup norm
  Point2 argmax;
};

/// Grid sup of |field| followed, when refine is set, by a compass search
/// started at the grid argmax. The result never falls below the plain grid sup.
GridSup estimate_sup_norm(const std::function<double(Point2)>& field, const EvalGrid& grid,
                          bool refine = true);

}  // namespace contica
