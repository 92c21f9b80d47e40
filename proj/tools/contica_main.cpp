// contica: command-line driver for the contaminated-ICA identifiability lab.
//
// Exit codes: 0 success, 1 validation error, 2 numerical check failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "contica/cdf_engine.hpp"
#include "contica/config.hpp"
#include "contica/limitfield.hpp"
#include "contica/montecarlo.hpp"
#include "contica/signed_measure.hpp"
#include "contica/svg.hpp"
#include "contica/verify.hpp"

namespace {

using namespace contica;

constexpr int kExitValidation = 1;
constexpr int kExitCheckFailed = 2;

// Writes to the named file, or stdout when the name is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Point2 parse_point(const std::string& text) {
  const auto v = parse_double_list(text);
  if (v.size() != 2) throw ConfigError("point needs two coordinates x1,x2");
  return {v[0], v[1]};
}

// Shared matrix/law flags.
struct ModelFlags {
  double alpha = 0.4;
  std::string matrix;
  std::string matrix_b;
  std::string center_xi = "true";

  void add_to(CLI::App& cmd, bool with_b) {
    cmd.add_option("--alpha", alpha, "Build the causal pair A, B from alpha");
    cmd.add_option("--matrix", matrix, "Mixing matrix a11,a12,a21,a22 (overrides --alpha)");
    if (with_b) cmd.add_option("--matrix-b", matrix_b, "Second matrix a11,a12,a21,a22");
    cmd.add_option("--center-xi", center_xi, "Use Exp(1)-1 (true) or Exp(1) (false) contamination");
  }
  MatrixPair pair() const {
    MatrixPair p = causal_pair(alpha);
    if (!matrix.empty()) p.a = MixingMatrix2::parse(matrix);
    if (!matrix_b.empty()) p.b = MixingMatrix2::parse(matrix_b);
    return p;
  }
  LawPair laws() const { return LawPair::standard(parse_bool(center_xi)); }
};

int run_experiment(const std::string& preset, const std::string& config_path, CLI::App& cmd,
                   const ModelFlags& model, const std::string& rho_text, const std::string& n_text,
                   double c, std::size_t reps, std::size_t grid_points, const std::string& grid_mode,
                   std::uint64_t seed, const std::string& out_path, unsigned workers, bool full_scale,
                   bool timing) {
  SweepConfig sweep;
  Config cfg;
  if (!config_path.empty()) cfg = parse_config(read_file(config_path));
  if (!preset.empty()) {
    sweep = sweep_preset(preset, full_scale);
    sweep.seed = cfg.seed;
  } else {
    sweep = cfg.to_sweep();
  }
  const auto given = [&](const char* name) { return cmd.get_option(name)->count() > 0; };
  if (given("--alpha") || given("--matrix") || given("--matrix-b")) {
    sweep.alpha = model.alpha;
    sweep.matrices = model.pair();
  }
  if (given("--center-xi")) sweep.laws = model.laws();
  if (given("--rho")) sweep.rho_list = parse_double_list(rho_text);
  if (given("--n-list")) sweep.n_list = parse_size_list(n_text);
  if (given("--c")) sweep.c = c;
  if (given("--reps")) sweep.reps = reps;
  if (given("--grid-points")) sweep.grid.points = grid_points;
  if (given("--grid-mode")) sweep.grid.mode = parse_grid_mode(grid_mode);
  if (given("--seed")) sweep.seed = seed;
  std::string out = cfg.out;
  if (given("--out")) out = out_path;

  const auto results = run_sweep(sweep, {workers, false, timing});
  Output sink(out);
  write_sweep_csv(sink.stream(), results, sweep_metadata(sweep));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contica: contaminated-ICA identifiability experiments"};
  app.require_subcommand(1);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo estimate of P(sqrt(n)||F_n^A - F^B||_inf > c)");
  std::string preset, config_path, rho_text, n_text, out_path, grid_mode = "corner-subsample";
  double c = 1.0;
  std::size_t reps = 200, grid_points = 500;
  std::uint64_t seed = 20240601;
  unsigned workers = 0;
  bool full_scale = false, timing = false;
  ModelFlags exp_model;
  experiment->add_option("--preset", preset, "fig1-left | fig1-right")->check(CLI::IsMember({"fig1-left", "fig1-right"}));
  experiment->add_option("--config", config_path, "key=value configuration file");
  experiment->add_option("--rho", rho_text, "Comma-separated rho values");
  experiment->add_option("--n-list", n_text, "Comma-separated sample sizes");
  experiment->add_option("--c", c, "Threshold c");
  experiment->add_option("--reps", reps, "Replications N");
  experiment->add_option("--grid-points", grid_points, "Evaluation points M");
  experiment->add_option("--grid-mode", grid_mode, "corner-subsample | quantile-tensor");
  experiment->add_option("--seed", seed, "Master seed");
  experiment->add_option("--out", out_path, "Output CSV (default stdout)");
  experiment->add_option("--workers", workers, "Worker threads (0 = all cores)");
  experiment->add_flag("--full-scale", full_scale, "Preset at N = 1000, M = 1000");
  experiment->add_flag("--timing", timing, "Record wall_ms (output is then not reproducible)");
  exp_model.add_to(*experiment, true);

  // limit
  auto* limit = app.add_subcommand("limit", "Simulate the law of ||W||_inf for the F^A-Gaussian field");
  ModelFlags limit_model;
  LimitOptions limit_opts;
  std::string c_list = "0.5,1,1.5", limit_out;
  unsigned limit_workers = 0;
  limit_model.add_to(*limit, false);
  limit->add_option("--n0", limit_opts.n0, "Sample size of each draw");
  limit->add_option("--reps", limit_opts.reps, "Number of draws");
  limit->add_option("--grid-points", limit_opts.grid.points, "Evaluation points M");
  limit->add_option("--c-list", c_list, "Thresholds");
  limit->add_option("--seed", limit_opts.seed, "Master seed");
  limit->add_option("--out", limit_out, "Output CSV (default stdout)");
  limit->add_option("--workers", limit_workers, "Worker threads (0 = all cores)");

  // verify
  auto* verify = app.add_subcommand("verify", "Numerical checks of the contamination theory");
  std::string check = "all", verify_out;
  ModelFlags verify_model;
  verify->add_option("--check", check, "all|thm31|lem33|lem35|cor34|lem32")
      ->check(CLI::IsMember({"all", "thm31", "lem33", "lem35", "cor34", "lem32"}));
  verify->add_option("--out", verify_out, "Output CSV (default stdout)");
  verify_model.add_to(*verify, true);

  // cdf
  auto* cdf = app.add_subcommand("cdf", "Evaluate F^A_beta at a point");
  ModelFlags cdf_model;
  double cdf_beta = 0.0;
  std::string cdf_x;
  cdf_model.add_to(*cdf, false);
  cdf->add_option("--beta", cdf_beta, "Contamination level")->required();
  cdf->add_option("--x", cdf_x, "Point x1,x2")->required();

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Evaluate Gamma_k(A) on a tensor grid, CSV x1,x2,value");
  ModelFlags gamma_model;
  int order = 1;
  std::string grid_text = "-6,6,101", gamma_out;
  gamma_model.add_to(*gamma, false);
  gamma->add_option("--order", order, "k in {0,1,2}")->check(CLI::Range(0, 2));
  gamma->add_option("--grid", grid_text, "lo,hi,points_per_axis");
  gamma->add_option("--out", gamma_out, "Output CSV (default stdout)");

  // plot
  auto* plot = app.add_subcommand("plot", "Render an experiment CSV as SVG");
  std::string plot_in, plot_out, axis = "n", title;
  plot->add_option("--in", plot_in, "Experiment CSV")->required();
  plot->add_option("--out", plot_out, "Output SVG (default stdout)");
  plot->add_option("--axis", axis, "n | rho")->check(CLI::IsMember({"n", "rho"}));
  plot->add_option("--title", title, "Chart title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*experiment) {
      return run_experiment(preset, config_path, *experiment, exp_model, rho_text, n_text, c, reps, grid_points,
                            grid_mode, seed, out_path, workers, full_scale, timing);
    }
    if (*limit) {
      limit_opts.laws = limit_model.laws();
      const MixingMatrix2 a = limit_model.pair().a;
      const auto cs = parse_double_list(c_list);
      const LimitLawSample sample = simulate_limit_sup(a, limit_opts, {limit_workers});
      Output sink(limit_out);
      auto& os = sink.stream();
      os << "# matrix=" << a.to_string() << "\n# n0=" << limit_opts.n0 << "\n# reps=" << limit_opts.reps
         << "\n# grid_mode=" << to_string(limit_opts.grid.mode) << "\n# grid_points=" << limit_opts.grid.points
         << "\n# seed=" << limit_opts.seed << "\n# method=" << sample.method << '\n';
      os << "c,estimate,stderr\n";
      for (double cv : cs) os << cv << ',' << sample.survival(cv) << ',' << sample.stderr_at(cv) << '\n';
      return 0;
    }
    if (*verify) {
      VerifyOptions opts;
      opts.pair = verify_model.pair();
      opts.laws = verify_model.laws();
      const auto reports = run_checks(check, opts);
      Output sink(verify_out);
      write_checks_csv(sink.stream(), reports);
      bool ok = true;
      for (const auto& r : reports) {
        std::cerr << (r.pass() ? "PASS " : "FAIL ") << r.id << '\n';
        ok = ok && r.pass();
      }
      return ok ? 0 : kExitCheckFailed;
    }
    if (*cdf) {
      const Point2 x = parse_point(cdf_x);
      const MixingMatrix2 a = cdf_model.pair().a;
      std::cout << "# matrix=" << a.to_string() << "\nbeta,x1,x2,cdf\n";
      std::cout.precision(15);
      std::cout << cdf_beta << ',' << x.x1 << ',' << x.x2 << ','
                << mixture_pushforward_cdf(a, cdf_beta, x, cdf_model.laws()) << '\n';
      return 0;
    }
    if (*gamma) {
      const auto g = parse_double_list(grid_text);
      if (g.size() != 3 || g[2] < 1) throw ConfigError("--grid needs lo,hi,points");
      const EvalGrid grid = EvalGrid::tensor(g[0], g[1], static_cast<std::size_t>(g[2]));
      const MixingMatrix2 a = gamma_model.pair().a;
      const NuMeasure nu(gamma_model.laws());
      Output sink(gamma_out);
      auto& os = sink.stream();
      os << "# matrix=" << a.to_string() << "\n# order=" << order << "\n# norm_c=" << nu.norm_c() << '\n';
      os << "x1,x2,value\n";
      os.precision(12);
      for (const Point2& p : grid.points()) os << p.x1 << ',' << p.x2 << ',' << gamma_k_at(a, order, p, nu) << '\n';
      return 0;
    }
    if (*plot) {
      std::ifstream in(plot_in);
      if (!in) throw ConfigError("cannot read '" + plot_in + "'");
      const auto results = read_sweep_csv(in);
      const PlotAxis plot_axis = axis == "rho" ? PlotAxis::Rho : PlotAxis::SampleSize;
      const auto series = series_from_results(results, plot_axis);
      AxesSpec axes;
      axes.title = title.empty() ? "P(sqrt(n)||F_n^A - F^B||_inf > c)" : title;
      axes.x_label = plot_axis == PlotAxis::Rho ? "rho" : "n";
      Output sink(plot_out);
      sink.stream() << render_svg(series, axes);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
