#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contica/matrix.hpp"
#include "contica/signed_measure.hpp"

namespace contica {

struct Measurement {
  std::string name;
  double value = 0.0;
  double lo = 0.0;  // inclusive
  double hi = 0.0;  // inclusive
  bool within() const noexcept { return value >= lo && value <= hi; }
};

struct CheckReport {
  std::string id;
  std::vector<Measurement> measurements;
  bool pass() const noexcept;
};

struct VerifyOptions {
  MatrixPair pair = causal_pair(0.4);
  LawPair laws{};
  EvalGrid grid = default_norm_grid();
  std::uint64_t seed = 20240601;
  std::size_t random_matrices = 10;
};

/// First-order rate: sup|D_beta - Gamma_1| at beta = 0.02, 0.01, 0.005 halves,
/// and sup|F^A_beta - F^A| decreases to zero.
CheckReport check_thm31(const MixingMatrix2& a, const EvalGrid& grid, const LawPair& laws = {});
/// sup|Gamma_1(A)| <= 4 and each single placement <= 2.
CheckReport check_lem33_lemA1(std::span<const MixingMatrix2> matrices, const EvalGrid& grid,
                              const LawPair& laws = {});
/// Gaussian equality under AA^t = BB^t and separation at beta = 0.5.
CheckReport check_lem35(const MixingMatrix2& a, const MixingMatrix2& b, const EvalGrid& grid,
                        const LawPair& laws = {});
/// Linear decay of sup|F^A_beta - F^B_beta| and agreement with the Gamma slope.
CheckReport check_cor34(const MixingMatrix2& a, const MixingMatrix2& b, const EvalGrid& grid,
                        const LawPair& laws = {});
/// Contaminated-family properties; throws if xi == zeta.
CheckReport check_lem32(const LawPair& laws = {});

/// Invertible matrices with entries uniform in [-1.5, 1.5] and |det| >= 0.2.
std::vector<MixingMatrix2> random_invertible_matrices(std::size_t count, std::uint64_t seed);

/// Runs one named check or "all".
std::vector<CheckReport> run_checks(std::string_view which, const VerifyOptions& options = {});

void write_checks_csv(std::ostream& out, std::span<const CheckReport> reports);

}  // namespace contica
