#include "code_kernel.hpp"

#include <algorithm>

namespace cycperm::detail {

CodeKernel::CodeKernel(const CyclicCodeSpec& code)
    : tables_(code.field()),
      n_(code.n()),
      k_(code.k()),
      deg_(static_cast<std::size_t>(code.gen().degree())),
      binary_(code.field().order() == 2),
      words_((deg_ + 63) / 64) {
  const auto& f = code.field();
  const auto& g = code.gen();
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    const auto v = static_cast<std::uint8_t>(f.index_of(g.coeffs()[i]));
    if (v) gen_support_.emplace_back(static_cast<std::uint32_t>(i), v);
  }
  if (deg_ == 0) return;

  // r_m = x^m mod g; g is monic.
  std::vector<std::uint8_t> gi(deg_ + 1);
  for (std::size_t i = 0; i <= deg_; ++i) gi[i] = static_cast<std::uint8_t>(f.index_of(g.coeffs()[i]));
  std::vector<std::uint8_t> cur(deg_, 0);
  cur[0] = 1;
  if (binary_) rem_bits_.assign(n_ * words_, 0);
  else rem_.assign(n_ * deg_, 0);
  for (std::size_t m = 0; m < n_; ++m) {
    if (m > 0) {
      // multiply by x, fold x^deg back with -g
      const std::uint8_t top = cur[deg_ - 1];
      for (std::size_t j = deg_ - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (top)
        for (std::size_t j = 0; j < deg_; ++j) cur[j] = tables_.sub(cur[j], tables_.mul(top, gi[j]));
    }
    if (binary_) {
      for (std::size_t j = 0; j < deg_; ++j)
        if (cur[j]) rem_bits_[m * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    } else {
      std::copy(cur.begin(), cur.end(), rem_.begin() + static_cast<std::ptrdiff_t>(m * deg_));
    }
  }
}

std::vector<std::uint8_t> CodeKernel::basis_dense(std::size_t i) const {
  std::vector<std::uint8_t> w(n_, 0);
  for (auto [e, v] : gen_support_) w[e + i] = v;
  return w;
}

CodeKernel::Scratch CodeKernel::make_scratch() const {
  Scratch s;
  s.bits.assign(words_, 0);
  s.acc.assign(deg_, 0);
  return s;
}

template <class Support>
bool CodeKernel::syndrome_zero(const Support& support, std::uint32_t shift, const std::uint32_t* inv,
                               Scratch& s) const {
  if (deg_ == 0) return true;
  if (binary_) {
    if (words_ == 1) {
      std::uint64_t acc = 0;
      for (const auto& [e, v] : support) acc ^= rem_bits_[inv[e + shift]];
      return acc == 0;
    }
    std::fill(s.bits.begin(), s.bits.end(), 0);
    for (const auto& [e, v] : support) {
      const std::uint64_t* row = &rem_bits_[inv[e + shift] * words_];
      for (std::size_t w = 0; w < words_; ++w) s.bits[w] ^= row[w];
    }
    for (auto w : s.bits)
      if (w) return false;
    return true;
  }
  std::fill(s.acc.begin(), s.acc.end(), 0);
  for (const auto& [e, v] : support) {
    const std::uint8_t* row = &rem_[inv[e + shift] * deg_];
    for (std::size_t j = 0; j < deg_; ++j)
      if (row[j]) s.acc[j] = tables_.add(s.acc[j], tables_.mul(v, row[j]));
  }
  for (auto a : s.acc)
    if (a) return false;
  return true;
}

bool CodeKernel::basis_preserved(std::size_t i, const std::uint32_t* inv, Scratch& s) const {
  return syndrome_zero(gen_support_, static_cast<std::uint32_t>(i), inv, s);
}

bool CodeKernel::sparse_preserved(const std::vector<std::pair<std::uint32_t, std::uint8_t>>& word,
                                  const std::uint32_t* inv, Scratch& s) const {
  return syndrome_zero(word, 0, inv, s);
}

bool CodeKernel::contains(const std::uint8_t* word, Scratch& s) const {
  std::vector<std::pair<std::uint32_t, std::uint8_t>> support;
  for (std::size_t i = 0; i < n_; ++i)
    if (word[i]) support.emplace_back(static_cast<std::uint32_t>(i), word[i]);
  std::vector<std::uint32_t> id(n_);
  for (std::size_t i = 0; i < n_; ++i) id[i] = static_cast<std::uint32_t>(i);
  return syndrome_zero(support, 0, id.data(), s);
}

}  // namespace cycperm::detail
