#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cycperm/poly.hpp"

namespace cycperm {

/// A length-n vector over the code's field; coordinate i is the
/// coefficient of x^i.
using Codeword = std::vector<FFElement>;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

namespace detail {
class CodeKernel;
struct KernelSlot;
}  // namespace detail

/// The cyclic code C_{n,g}. Construction validates g | x^n - 1 and derives
/// k, the check polynomial and the dual generator.
class CyclicCodeSpec {
 public:
  const FieldSpec& field() const { return gen_.field(); }
  std::size_t n() const { return n_; }
  const Poly& gen() const { return gen_; }
  std::size_t k() const { return k_; }
  const Poly& check() const { return check_; }
  const Poly& dual_gen() const { return dual_gen_; }

  /// Lazily built index-encoded tables shared by the search routines.
  const detail::CodeKernel& kernel() const;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  Poly gen_, check_, dual_gen_;
  std::shared_ptr<detail::KernelSlot> kernel_;

  friend CyclicCodeSpec make_code(const FieldSpec& f, std::size_t n, const Poly& g);
};

CyclicCodeSpec make_code(const FieldSpec& f, std::size_t n, const Poly& g);
/// Code generated by dual_gen().
CyclicCodeSpec dual_code(const CyclicCodeSpec& code);
/// Generator lcm of all inputs.
CyclicCodeSpec intersect(const std::vector<CyclicCodeSpec>& codes);

Codeword poly_to_word(const Poly& p, std::size_t n);
Poly word_to_poly(const Codeword& c, const FieldSpec& f);
Codeword cyclic_shift(const Codeword& c);
std::size_t hamming_weight(const Codeword& c);

bool contains(const CyclicCodeSpec& code, const Codeword& c);

/// The k words x^i g(x), i < k.
std::vector<Codeword> basis_words(const CyclicCodeSpec& code);

/// Streams all q^k codewords, message m_0 most significant, so the order is
/// lexicographic in the message coefficient sequence.
class CodewordEnumerator {
 public:
  explicit CodewordEnumerator(const CyclicCodeSpec& code, std::uint64_t cap = kDefaultEnumerationCap);
  std::uint64_t size() const { return total_; }
  bool next(Codeword& out);

 private:
  CyclicCodeSpec code_;
  std::vector<Codeword> basis_;
  std::vector<std::uint64_t> digits_;
  Codeword current_;
  std::uint64_t total_ = 0;
  std::uint64_t emitted_ = 0;
};

std::vector<Codeword> enumerate_codewords(const CyclicCodeSpec& code,
                                          std::uint64_t cap = kDefaultEnumerationCap);
std::size_t min_distance(const CyclicCodeSpec& code, std::uint64_t cap = kDefaultEnumerationCap);

enum class Layout { RowBlocks, ColBlocks };

struct MatrixRep {
  Layout layout = Layout::RowBlocks;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<FFElement>> grid;
};

/// RowBlocks: `block` is the column count, grid(i,j) = c[i*cols + j].
/// ColBlocks: `block` is the row count, grid(i,j) = c[j*rows + i].
MatrixRep matrix_rep(const Codeword& c, Layout layout, std::size_t block);
Codeword flatten(const MatrixRep& m);

}  // namespace cycperm
