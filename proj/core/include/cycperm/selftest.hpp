#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cycperm/permutation.hpp"
#include "cycperm/poly.hpp"

namespace cycperm {

struct SelftestOptions {
  std::uint64_t seed = 20240611;
  std::size_t cases = 1000;  // randomized cases per property
  /// Composition used by the action-coherence property; empty means compose().
  std::function<Permutation(const Permutation&, const Permutation&)> compose;
  /// Build desk-scale wreath groups with the A-copies on contiguous blocks
  /// instead of residue classes.
  bool transpose_wreath = false;
};

struct SelftestCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, if any
  double elapsed_ms = 0;
};

struct SelftestResult {
  std::vector<SelftestCheck> checks;
  bool passed() const;
};

SelftestResult run_selftest(const SelftestOptions& options = {});

/// Every monic divisor of x^n - 1 over f, from its factorization.
std::vector<Poly> xn_minus_1_divisors(std::uint64_t n, const FieldSpec& f);

}  // namespace cycperm
