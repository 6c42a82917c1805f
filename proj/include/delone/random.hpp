/* Apache License, Version 2.0 */

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace delone {

/// Derives independent, reproducible random streams ("generator",
/// "jitter", "perturbation", ...) from one 64-bit seed.
class SeedSplitter {
 public:
  explicit SeedSplitter(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_seed(std::string_view name) const noexcept;
  std::mt19937_64 stream(std::string_view name) const { return std::mt19937_64(stream_seed(name)); }

 private:
  std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace delone
