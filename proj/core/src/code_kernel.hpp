#pragma once

// Index-encoded view of a cyclic code used by every search and certification
// routine. Field elements are bytes (q <= 256); membership of a permuted
// word is a syndrome built from precomputed remainders x^m mod g.

#include <cstdint>
#include <utility>
#include <vector>

#include "cycperm/cyclic_code.hpp"

namespace cycperm::detail {

class CodeKernel {
 public:
  explicit CodeKernel(const CyclicCodeSpec& code);

  struct Scratch {
    std::vector<std::uint64_t> bits;
    std::vector<std::uint8_t> acc;
  };

  const FieldTables& tables() const { return tables_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t redundancy() const { return deg_; }
  bool binary() const { return binary_; }

  /// Nonzero entries of g as (exponent, value).
  const std::vector<std::pair<std::uint32_t, std::uint8_t>>& gen_support() const { return gen_support_; }
  std::vector<std::uint8_t> basis_dense(std::size_t i) const;

  Scratch make_scratch() const;

  /// Basis word x^i g mapped by the permutation whose inverse images are
  /// `inv` (inv[s] = new position of old coordinate s); true if the image
  /// is a codeword.
  bool basis_preserved(std::size_t i, const std::uint32_t* inv, Scratch& s) const;
  /// Same for an arbitrary sparse word.
  bool sparse_preserved(const std::vector<std::pair<std::uint32_t, std::uint8_t>>& word,
                        const std::uint32_t* inv, Scratch& s) const;
  /// Membership of a dense index-encoded word.
  bool contains(const std::uint8_t* word, Scratch& s) const;

 private:
  FieldTables tables_;
  std::size_t n_, k_, deg_;
  bool binary_;
  std::size_t words_;  // 64-bit words per binary remainder
  std::vector<std::pair<std::uint32_t, std::uint8_t>> gen_support_;
  std::vector<std::uint64_t> rem_bits_;  // n_ x words_
  std::vector<std::uint8_t> rem_;        // n_ x deg_

  template <class Support>
  bool syndrome_zero(const Support& support, std::uint32_t shift, const std::uint32_t* inv, Scratch& s) const;
};

}  // namespace cycperm::detail
