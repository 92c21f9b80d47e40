#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(CONTICA_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) o.out.append(buf, got);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "contica_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, CdfPrintsValue) {
  const auto o = run("cdf --beta 0 --x 0,0");
  EXPECT_EQ(o.code, 0);
  const auto last_line = o.out.substr(o.out.rfind('\n', o.out.size() - 2) + 1);
  EXPECT_NEAR(std::stod(last_line.substr(last_line.rfind(',') + 1)), 0.3154949, 1e-7);
}

TEST(Cli, BadInputsExitWithOne) {
  EXPECT_EQ(run("cdf --beta 0.5 --x 0").code, 1);
  EXPECT_EQ(run("cdf --beta 2 --x 0,0").code, 1);
  EXPECT_EQ(run("experiment --alpha 1.5").code, 1);
  EXPECT_EQ(run("").code, 1);
}

TEST(Cli, ConfigErrorsExitWithOne) {
  const auto cfg = scratch("bad.cfg");
  std::ofstream(cfg) << "colour=blue\n";
  EXPECT_EQ(run("experiment --config " + cfg.string()).code, 1);
}

TEST(Cli, VerifySingleCheck) {
  const auto o = run("verify --check lem32");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("check,measurement"), std::string::npos);
}

TEST(Cli, ExperimentReproducibleAcrossWorkers) {
  const std::string common = "experiment --rho 0.25,0.75 --n-list 50,120 --reps 20 --grid-points 100 --seed 9";
  const auto a = scratch("a.csv"), b = scratch("b.csv");
  ASSERT_EQ(run(common + " --workers 1 --out " + a.string()).code, 0);
  ASSERT_EQ(run(common + " --workers 3 --out " + b.string()).code, 0);
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_NE(text.find("scenario_id,rho,beta,n,c,N,grid_mode,grid_points,estimate,stderr,seed,wall_ms"),
            std::string::npos);

  const auto svg = scratch("a.svg");
  ASSERT_EQ(run("plot --in " + a.string() + " --out " + svg.string()).code, 0);
  const std::string s = slurp(svg);
  EXPECT_EQ(s.rfind("<svg", 0), 0u);
}

TEST(Cli, GammaGridHasOneRowPerPoint) {
  const auto o = run("gamma --order 1 --grid -1,1,3");
  ASSERT_EQ(o.code, 0);
  std::istringstream is(o.out);
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) rows += !line.empty() && line[0] != '#' && line.rfind("x1", 0) != 0;
  EXPECT_EQ(rows, 9);
}
