#include "contica/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace contica {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::span<const std::uint64_t> path) noexcept {
  std::uint64_t h = mix64(master_seed);
  for (std::size_t i = 0; i < path.size(); ++i) {
    // Position-dependent so that {a, b} and {b, a} differ.
    h = mix64(h ^ mix64(path[i] + 0x632be59bd9b4e019ULL * (i + 1)));
  }
  return h;
}

RngStream::RngStream(std::uint64_t master_seed, std::initializer_list<std::uint64_t> path)
    : RngStream(master_seed, std::span<const std::uint64_t>(path.begin(), path.size())) {}

RngStream::RngStream(std::uint64_t master_seed, std::span<const std::uint64_t> path)
    : master_seed_(master_seed),
      path_(path.begin(), path.end()),
      engine_(derive_seed(master_seed, path)) {}

RngStream RngStream::substream(std::uint64_t index) const {
  std::vector<std::uint64_t> child = path_;
  child.push_back(index);
  return RngStream(master_seed_, std::span<const std::uint64_t>(child));
}

double RngStream::uniform() noexcept {
  // 53 random bits centred in their cell: never 0 or 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() { return normal_(engine_); }

double RngStream::exponential() noexcept { return -std::log(uniform()); }

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(engine_);
}

}  // namespace contica
