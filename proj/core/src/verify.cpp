#include "contica/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "contica/cdf_engine.hpp"
#include "contica/parallel.hpp"
#include "contica/tolerances.hpp"

namespace contica {

namespace tol = tolerance;

bool CheckReport::pass() const noexcept {
  return std::all_of(measurements.begin(), measurements.end(),
                     [](const Measurement& m) { return m.within(); });
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The four pure product pushforwards at every grid point.
struct PureGrid {
  std::vector<double> zz, xz, zx, xx;

  double mixture(std::size_t i, double beta) const {
    const auto w = mixture_weights(beta);
    return w[0] * zz[i] + w[1] * xz[i] + w[2] * zx[i] + w[3] * xx[i];
  }
  double gamma1(std::size_t i, double c) const { return ((xz[i] - zz[i]) + (zx[i] - zz[i])) / c; }
  std::size_t size() const { return zz.size(); }
};

PureGrid pure_grid(const MixingMatrix2& a, const LawPair& laws, std::span<const Point2> points) {
  PureGrid g;
  g.zz.resize(points.size());
  g.xz.resize(points.size());
  g.zx.resize(points.size());
  g.xx.resize(points.size());
  parallel_for(points.size(), 0, [&](std::size_t i) {
    g.zz[i] = pure_pushforward_cdf(a, {laws.zeta, laws.zeta}, points[i]);
    g.xz[i] = pure_pushforward_cdf(a, {laws.xi, laws.zeta}, points[i]);
    g.zx[i] = pure_pushforward_cdf(a, {laws.zeta, laws.xi}, points[i]);
    g.xx[i] = pure_pushforward_cdf(a, {laws.xi, laws.xi}, points[i]);
  });
  return g;
}

template <class F>
double grid_sup(std::size_t count, F&& f) {
  double best = 0.0;
  for (std::size_t i = 0; i < count; ++i) best = std::max(best, std::abs(f(i)));
  return best;
}

double safe_ratio(double num, double den) {
  if (den == 0.0) return num == 0.0 ? 1.0 : kInf;
  return num / den;
}

}  // namespace

CheckReport check_thm31(const MixingMatrix2& a, const EvalGrid& grid, const LawPair& laws) {
  const NuMeasure nu(laws);
  const double c = nu.norm_c();
  const PureGrid g = pure_grid(a, laws, grid.points());
  const std::array<double, 3> betas{tol::kRateBeta, tol::kRateBeta / 2, tol::kRateBeta / 4};

  std::array<double, 3> remainder{};
  std::array<double, 3> distance{};
  for (std::size_t b = 0; b < betas.size(); ++b) {
    const double beta = betas[b];
    remainder[b] = grid_sup(g.size(), [&](std::size_t i) {
      const double d = (g.mixture(i, beta) - g.zz[i]) / (beta * c);
      return d - g.gamma1(i, c);
    });
    distance[b] = grid_sup(g.size(), [&](std::size_t i) { return g.mixture(i, beta) - g.zz[i]; });
  }

  CheckReport r{"thm31", {}};
  for (std::size_t b = 0; b < betas.size(); ++b) {
    r.measurements.push_back({"sup|D_beta-Gamma1| beta=" + std::to_string(betas[b]), remainder[b], 0.0, kInf});
    r.measurements.push_back({"sup|F_beta-F| beta=" + std::to_string(betas[b]), distance[b], 0.0, 1.0});
  }
  for (std::size_t b = 1; b < betas.size(); ++b) {
    r.measurements.push_back({"halving ratio " + std::to_string(b), safe_ratio(remainder[b], remainder[b - 1]),
                              tol::kRateRatioLo, tol::kRateRatioHi});
    r.measurements.push_back({"distance decrease " + std::to_string(b), safe_ratio(distance[b], distance[b - 1]),
                              0.0, std::nextafter(1.0, 0.0)});
  }
  return r;
}

CheckReport check_lem33_lemA1(std::span<const MixingMatrix2> matrices, const EvalGrid& grid,
                              const LawPair& laws) {
  const NuMeasure nu(laws);
  const double c = nu.norm_c();
  CheckReport r{"lem33", {}};
  for (std::size_t m = 0; m < matrices.size(); ++m) {
    const PureGrid g = pure_grid(matrices[m], laws, grid.points());
    const std::string tag = "[" + std::to_string(m) + "]";
    r.measurements.push_back({"sup|Gamma1|" + tag, grid_sup(g.size(), [&](std::size_t i) { return g.gamma1(i, c); }),
                              0.0, tol::kGamma1Bound});
    r.measurements.push_back({"sup|L(nu x zeta)|" + tag,
                              grid_sup(g.size(), [&](std::size_t i) { return (g.xz[i] - g.zz[i]) / c; }), 0.0,
                              tol::kSingleTermBound});
    r.measurements.push_back({"sup|L(zeta x nu)|" + tag,
                              grid_sup(g.size(), [&](std::size_t i) { return (g.zx[i] - g.zz[i]) / c; }), 0.0,
                              tol::kSingleTermBound});
  }
  return r;
}

CheckReport check_lem35(const MixingMatrix2& a, const MixingMatrix2& b, const EvalGrid& grid,
                        const LawPair& laws) {
  const Gram2 ga = a.gram();
  const Gram2 gb = b.gram();
  const double gram_gap = std::max({std::abs(ga.s11 - gb.s11), std::abs(ga.s12 - gb.s12), std::abs(ga.s22 - gb.s22)});

  const PureGrid pa = pure_grid(a, laws, grid.points());
  const PureGrid pb = pure_grid(b, laws, grid.points());
  const double gaussian_gap = grid_sup(pa.size(), [&](std::size_t i) { return pa.zz[i] - pb.zz[i]; });
  const double beta = tol::kNonGaussianBeta;
  const double contaminated_gap =
      grid_sup(pa.size(), [&](std::size_t i) { return pa.mixture(i, beta) - pb.mixture(i, beta); });

  CheckReport r{"lem35", {}};
  r.measurements.push_back({"max|AA^t-BB^t|", gram_gap, 0.0, 1e-12});
  r.measurements.push_back({"sup|F^A-F^B| beta=0", gaussian_gap, 0.0, tol::kGaussianEqualityAbs});
  r.measurements.push_back({"sup|F^A_b-F^B_b| beta=0.5", contaminated_gap,
                            std::nextafter(tol::kNonGaussianSeparation, kInf), kInf});
  return r;
}

CheckReport check_cor34(const MixingMatrix2& a, const MixingMatrix2& b, const EvalGrid& grid,
                        const LawPair& laws) {
  const NuMeasure nu(laws);
  const double c = nu.norm_c();
  const PureGrid pa = pure_grid(a, laws, grid.points());
  const PureGrid pb = pure_grid(b, laws, grid.points());

  const auto r_of = [&](double beta) {
    return grid_sup(pa.size(), [&](std::size_t i) { return pa.mixture(i, beta) - pb.mixture(i, beta); }) / beta;
  };
  const double r_hi = r_of(tol::kLinearityBetaHi);
  const double r_lo = r_of(tol::kLinearityBetaLo);
  const double slope = c * grid_sup(pa.size(), [&](std::size_t i) { return pa.gamma1(i, c) - pb.gamma1(i, c); });
  const double base_gap = grid_sup(pa.size(), [&](std::size_t i) { return pa.zz[i] - pb.zz[i]; });

  CheckReport r{"cor34", {}};
  r.measurements.push_back({"sup|F^A-F^B| beta=0", base_gap, 0.0, tol::kGaussianEqualityAbs});
  r.measurements.push_back({"r(0.01)", r_hi, 0.0, 8.0 * c});
  r.measurements.push_back({"r(0.005)", r_lo, 0.0, 8.0 * c});
  r.measurements.push_back({"|r(0.005)/r(0.01)-1|", std::abs(safe_ratio(r_lo, r_hi) - 1.0), 0.0, tol::kLinearityRel});
  r.measurements.push_back({"|r(0.005)/(c*sup|Gamma|)-1|", std::abs(safe_ratio(r_lo, slope) - 1.0), 0.0,
                            tol::kLinearityRel});
  return r;
}

CheckReport check_lem32(const LawPair& laws) {
  if (laws.xi == laws.zeta) throw std::invalid_argument("check_lem32 needs xi != zeta");
  const double norm = contamination_norm(laws);
  CheckReport r{"lem32", {}};
  r.measurements.push_back({"||xi-zeta||", norm, std::nextafter(0.0, 1.0), 1.0});

  const std::array<double, 3> betas{0.1, 0.3, 0.7};
  constexpr std::size_t kPoints = 1001;
  std::vector<std::vector<double>> directions;
  for (double beta : betas) {
    const ContaminatedLaw law(beta, laws);
    const double dist = kolmogorov_distance(law, laws.zeta);
    r.measurements.push_back({"|d(P_e(" + std::to_string(beta) + "),zeta)-beta*norm|",
                              std::abs(dist - beta * norm), 0.0, tol::kContaminationLinearityAbs});
    std::vector<double> dir(kPoints);
    for (std::size_t i = 0; i < kPoints; ++i) {
      const double t = -10.0 + 20.0 * static_cast<double>(i) / (kPoints - 1);
      dir[i] = (law.cdf(t) - laws.zeta.cdf(t)) / dist;
    }
    directions.push_back(std::move(dir));
  }
  double spread = 0.0;
  for (std::size_t b = 1; b < directions.size(); ++b) {
    for (std::size_t i = 0; i < kPoints; ++i) spread = std::max(spread, std::abs(directions[b][i] - directions[0][i]));
  }
  r.measurements.push_back({"direction spread", spread, 0.0, tol::kDirectionAbs});
  const double degenerate = kolmogorov_distance(ContaminatedLaw(0.0, laws), laws.zeta);
  r.measurements.push_back({"d(P_e(0),zeta)", degenerate, 0.0, 0.0});
  return r;
}

std::vector<MixingMatrix2> random_invertible_matrices(std::size_t count, std::uint64_t seed) {
  RngStream rng(seed, {0x4d41545249ULL});
  std::vector<MixingMatrix2> out;
  while (out.size() < count) {
    std::array<double, 4> e{};
    for (double& v : e) v = -1.5 + 3.0 * rng.uniform();
    if (std::abs(e[0] * e[3] - e[1] * e[2]) < 0.2) continue;
    out.emplace_back(e[0], e[1], e[2], e[3]);
  }
  return out;
}

std::vector<CheckReport> run_checks(std::string_view which, const VerifyOptions& options) {
  const bool all = which == "all";
  if (!all && which != "thm31" && which != "lem33" && which != "lem35" && which != "cor34" && which != "lem32") {
    throw std::invalid_argument("unknown check '" + std::string(which) + "'");
  }
  const auto& [a, b] = options.pair;
  std::vector<CheckReport> reports;
  if (all || which == "lem32") reports.push_back(check_lem32(options.laws));
  if (all || which == "thm31") reports.push_back(check_thm31(a, options.grid, options.laws));
  if (all || which == "lem33") {
    std::vector<MixingMatrix2> matrices{a, b, MixingMatrix2::identity()};
    for (const auto& m : random_invertible_matrices(options.random_matrices, options.seed)) matrices.push_back(m);
    reports.push_back(check_lem33_lemA1(matrices, options.grid, options.laws));
  }
  if (all || which == "lem35") reports.push_back(check_lem35(a, b, options.grid, options.laws));
  if (all || which == "cor34") reports.push_back(check_cor34(a, b, options.grid, options.laws));
  return reports;
}

void write_checks_csv(std::ostream& out, std::span<const CheckReport> reports) {
  out << "check,measurement,value,lo,hi,pass\n";
  const auto num = [](double v) {
    if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return std::string(buf);
  };
  for (const CheckReport& r : reports) {
    for (const Measurement& m : r.measurements) {
      out << r.id << ",\"" << m.name << "\"," << num(m.value) << ',' << num(m.lo) << ',' << num(m.hi) << ','
          << (m.within() ? "true" : "false") << '\n';
    }
  }
}

}  // namespace contica
