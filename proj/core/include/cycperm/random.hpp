#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "cycperm/permutation.hpp"

namespace cycperm {

/// Seeded stream with a platform-independent contract: std::mt19937_64 has
/// a standardized output sequence, and bounded draws use plain rejection
/// sampling rather than std::uniform_int_distribution (whose algorithm is
/// implementation-defined).
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/rejection";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Reject the lowest 2^64 mod bound values so the rest split evenly.
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Fisher-Yates from the top index down.
inline Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(im[i - 1], im[rng.below(i)]);
  return Permutation(std::move(im));
}

}  // namespace cycperm
