#pragma once

#include <cstdint>
#include <random>

namespace toroidal {

/// mt19937_64 is fully specified by the standard; the distributions are not,
/// so bounded draws use rejection sampling here to stay reproducible everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace toroidal
