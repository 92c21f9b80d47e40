#include "contica/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace contica {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

template <class T, class Parse>
std::vector<T> parse_list(std::string_view text, Parse parse) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(parse(trim(text.substr(start, end - start))));
    start = end + 1;
  }
  return out;
}

}  // namespace

double parse_double(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("malformed number '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("malformed integer '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("malformed boolean '" + std::string(text) + "'");
}

std::vector<double> parse_double_list(std::string_view text) {
  return parse_list<double>(text, parse_double);
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  return parse_list<std::size_t>(text, [](std::string_view s) { return static_cast<std::size_t>(parse_u64(s)); });
}

MatrixPair Config::matrices() const {
  const MatrixPair causal = causal_pair(alpha);
  return {matrix_a.value_or(causal.a), matrix_b.value_or(causal.b)};
}

SweepConfig Config::to_sweep() const {
  SweepConfig s;
  s.matrices = matrices();
  s.alpha = alpha;
  s.laws = LawPair::standard(center_xi);
  s.rho_list = rho_list;
  s.n_list = n_list;
  s.c = c;
  s.reps = reps;
  s.grid = {grid_mode, grid_points};
  s.seed = seed;
  return s;
}

Config parse_config(std::string_view text) {
  Config cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    try {
      if (key == "alpha") {
        cfg.alpha = parse_double(value);
        if (!(std::abs(cfg.alpha) < 1.0)) throw ConfigError("alpha must satisfy |alpha| < 1");
      } else if (key == "matrix_a") {
        cfg.matrix_a = MixingMatrix2::parse(value);
      } else if (key == "matrix_b") {
        cfg.matrix_b = MixingMatrix2::parse(value);
      } else if (key == "rho_list") {
        cfg.rho_list = parse_double_list(value);
        for (double r : cfg.rho_list) {
          if (!(r > 0.0)) throw ConfigError("rho values must be positive");
        }
      } else if (key == "n_list") {
        cfg.n_list = parse_size_list(value);
        for (std::size_t n : cfg.n_list) {
          if (n < 1) throw ConfigError("n values must be >= 1");
        }
      } else if (key == "c") {
        cfg.c = parse_double(value);
        if (!(cfg.c >= 0.0)) throw ConfigError("c must be >= 0");
      } else if (key == "reps") {
        cfg.reps = parse_u64(value);
        if (cfg.reps < 1) throw ConfigError("reps must be >= 1");
      } else if (key == "grid_mode") {
        cfg.grid_mode = parse_grid_mode(value);
      } else if (key == "grid_points") {
        cfg.grid_points = parse_u64(value);
        if (cfg.grid_points < 1) throw ConfigError("grid_points must be >= 1");
      } else if (key == "seed") {
        cfg.seed = parse_u64(value);
      } else if (key == "out") {
        cfg.out = std::string(value);
      } else if (key == "center_xi") {
        cfg.center_xi = parse_bool(value);
      } else {
        throw ConfigError("unknown key '" + std::string(key) + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

std::string render_config(const Config& cfg) {
  std::ostringstream os;
  os << "alpha=" << format_double(cfg.alpha) << '\n';
  if (cfg.matrix_a) os << "matrix_a=" << cfg.matrix_a->to_string() << '\n';
  if (cfg.matrix_b) os << "matrix_b=" << cfg.matrix_b->to_string() << '\n';
  os << "rho_list=";
  for (std::size_t i = 0; i < cfg.rho_list.size(); ++i) os << (i ? "," : "") << format_double(cfg.rho_list[i]);
  os << "\nn_list=";
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) os << (i ? "," : "") << cfg.n_list[i];
  os << "\nc=" << format_double(cfg.c) << '\n';
  os << "reps=" << cfg.reps << '\n';
  os << "grid_mode=" << to_string(cfg.grid_mode) << '\n';
  os << "grid_points=" << cfg.grid_points << '\n';
  os << "seed=" << cfg.seed << '\n';
  os << "out=" << cfg.out << '\n';
  os << "center_xi=" << (cfg.center_xi ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace contica
