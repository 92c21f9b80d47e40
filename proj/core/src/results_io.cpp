#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "contica/montecarlo.hpp"

namespace contica {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    if constexpr (std::is_floating_point_v<T>) os << format_double(values[i]);
    else os << values[i];
  }
  return os.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_field(const std::string& s) {
  if (s == "NA") return std::nan("");
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  return v;
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const ScenarioResult> results,
                     std::span<const std::string> metadata) {
  for (const std::string& line : metadata) out << "# " << line << '\n';
  out << kSweepCsvHeader << '\n';
  for (const ScenarioResult& r : results) {
    out << r.scenario_id << ',' << format_double(r.rho) << ',' << format_double(r.beta) << ','
        << r.n << ',' << format_double(r.c) << ',' << r.reps << ',' << to_string(r.grid_mode) << ','
        << r.grid_points << ',' << format_double(r.estimate) << ',' << format_double(r.stderr_) << ','
        << r.seed << ',' << (r.wall_ms ? format_double(std::round(*r.wall_ms * 1000.0) / 1000.0) : "NA")
        << '\n';
  }
}

std::vector<ScenarioResult> read_sweep_csv(std::istream& in) {
  std::vector<ScenarioResult> results;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kSweepCsvHeader) throw std::invalid_argument("unexpected CSV header: " + line);
      header_seen = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 12) throw std::invalid_argument("CSV row needs 12 fields: " + line);
    ScenarioResult r;
    r.scenario_id = std::stoull(f[0]);
    r.rho = parse_field(f[1]);
    r.beta = parse_field(f[2]);
    r.n = std::stoull(f[3]);
    r.c = parse_field(f[4]);
    r.reps = std::stoull(f[5]);
    r.grid_mode = parse_grid_mode(f[6]);
    r.grid_points = std::stoull(f[7]);
    r.estimate = parse_field(f[8]);
    r.stderr_ = parse_field(f[9]);
    r.seed = std::stoull(f[10]);
    if (f[11] != "NA") r.wall_ms = parse_field(f[11]);
    results.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("CSV input has no header");
  return results;
}

std::vector<std::string> sweep_metadata(const SweepConfig& config) {
  std::vector<std::string> meta;
  if (!config.preset.empty()) meta.push_back("preset=" + config.preset);
  meta.push_back("alpha=" + format_double(config.alpha));
  meta.push_back("matrix_a=" + config.matrices.a.to_string());
  meta.push_back("matrix_b=" + config.matrices.b.to_string());
  meta.push_back("xi=" + std::string(to_string(config.laws.xi.kind())));
  meta.push_back("zeta=" + std::string(to_string(config.laws.zeta.kind())));
  meta.push_back("rho_list=" + join(config.rho_list));
  meta.push_back("n_list=" + join(config.n_list));
  meta.push_back("c=" + format_double(config.c));
  meta.push_back("reps=" + std::to_string(config.reps));
  meta.push_back("grid_mode=" + std::string(to_string(config.grid.mode)));
  meta.push_back("grid_points=" + std::to_string(config.grid.points));
  meta.push_back("seed=" + std::to_string(config.seed));
  return meta;
}

}  // namespace contica
