#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace contica {

/// Mixes a 64-bit value (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives a 64-bit seed from a master seed and a path of integers. Pure.
std::uint64_t derive_seed(std::uint64_t master_seed, std::span<const std::uint64_t> path) noexcept;

/// A random stream identified by (master seed, path). Two streams with equal
/// identity produce identical draws. Streams are owned, never shared between
/// threads.
class RngStream {
 public:
  using Engine = std::mt19937_64;

  RngStream(std::uint64_t master_seed, std::initializer_list<std::uint64_t> path);
  RngStream(std::uint64_t master_seed, std::span<const std::uint64_t> path);

  /// Child stream with path + {index}; independent of how much of *this was consumed.
  RngStream substream(std::uint64_t index) const;

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  const std::vector<std::uint64_t>& path() const noexcept { return path_; }

  /// Uniform on the open interval (0,1).
  double uniform() noexcept;
  double normal();
  /// Exp(1) via -log(U).
  double exponential() noexcept;
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  Engine& engine() noexcept { return engine_; }

 private:
  std::uint64_t master_seed_;
  std::vector<std::uint64_t> path_;
  Engine engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace contica
