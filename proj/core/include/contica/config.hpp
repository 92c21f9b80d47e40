#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "contica/empirical.hpp"
#include "contica/matrix.hpp"
#include "contica/montecarlo.hpp"

namespace contica {

/// Validation failure in user input (config text, CLI values).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// key=value experiment configuration. Blank lines and '#' comments are ignored.
struct Config {
  double alpha = 0.4;
  std::optional<MixingMatrix2> matrix_a;
  std::optional<MixingMatrix2> matrix_b;
  std::vector<double> rho_list{0.25, 0.35, 0.50, 0.75};
  std::vector<std::size_t> n_list{100, 250, 500, 1000, 2000};
  double c = 1.0;
  std::size_t reps = 200;
  GridMode grid_mode = GridMode::CornerSubsample;
  std::size_t grid_points = 500;
  std::uint64_t seed = 20240601;
  std::string out;
  bool center_xi = true;

  /// Explicit matrices when given, otherwise the causal pair built from alpha.
  MatrixPair matrices() const;
  SweepConfig to_sweep() const;

  friend bool operator==(const Config&, const Config&) = default;
};

Config parse_config(std::string_view text);
std::string render_config(const Config& config);

std::vector<double> parse_double_list(std::string_view text);
std::vector<std::size_t> parse_size_list(std::string_view text);
double parse_double(std::string_view text);
std::uint64_t parse_u64(std::string_view text);
bool parse_bool(std::string_view text);

}  // namespace contica
