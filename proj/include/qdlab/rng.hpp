#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qdlab {

// Deterministic generator used by every stochastic operation in the library.
// The algorithm is fixed (mt19937_64) and all derived draws (uniforms,
// gaussians, integers, subsets) are produced by explicit arithmetic on the raw
// stream, so a seed pins byte-identical outcome sequences across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t raw() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_int(std::uint64_t bound);

  // Standard normal via Box-Muller; pairs are cached.
  double gaussian();

  // k distinct values sampled uniformly from {0, ..., n-1}, ascending order.
  std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n,
                                                        std::uint64_t k);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> spare_gaussian_;
};

}  // namespace qdlab
