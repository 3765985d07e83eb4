#include "cycperm/cyclic_code.hpp"

#include <algorithm>
#include <mutex>

#include "code_kernel.hpp"
#include "cycperm/error.hpp"

namespace cycperm {

namespace detail {
struct KernelSlot {
  std::once_flag once;
  std::unique_ptr<CodeKernel> kernel;
};
}  // namespace detail

CyclicCodeSpec make_code(const FieldSpec& f, std::size_t n, const Poly& g) {
  if (!(g.field() == f)) throw Error(ErrorCode::FieldMismatch, "generator is over a different field");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "length must be >= 1");
  if (!g.is_monic()) throw Error(ErrorCode::NotADivisor, "generator must be monic");
  if (g.degree() > static_cast<int>(n))
    throw Error(ErrorCode::NotADivisor, "generator degree exceeds length");
  CyclicCodeSpec c;
  c.n_ = n;
  c.gen_ = g;
  c.check_ = check_polynomial(g, n);
  c.k_ = n - static_cast<std::size_t>(g.degree());
  c.dual_gen_ = dual_generator(g, n);
  c.kernel_ = std::make_shared<detail::KernelSlot>();
  return c;
}

const detail::CodeKernel& CyclicCodeSpec::kernel() const {
  std::call_once(kernel_->once, [&] { kernel_->kernel = std::make_unique<detail::CodeKernel>(*this); });
  return *kernel_->kernel;
}

CyclicCodeSpec dual_code(const CyclicCodeSpec& code) { return make_code(code.field(), code.n(), code.dual_gen()); }

CyclicCodeSpec intersect(const std::vector<CyclicCodeSpec>& codes) {
  if (codes.empty()) throw Error(ErrorCode::InvalidArgument, "intersect needs at least one code");
  Poly g = codes.front().gen();
  for (std::size_t i = 1; i < codes.size(); ++i) {
    if (!(codes[i].field() == codes.front().field()))
      throw Error(ErrorCode::FieldMismatch, "codes over different fields");
    if (codes[i].n() != codes.front().n()) throw Error(ErrorCode::LengthMismatch, "codes of different lengths");
    g = poly_lcm(g, codes[i].gen());
  }
  return make_code(codes.front().field(), codes.front().n(), g);
}

Codeword poly_to_word(const Poly& p, std::size_t n) {
  if (p.degree() >= static_cast<int>(n))
    throw Error(ErrorCode::LengthMismatch, "polynomial degree does not fit length " + std::to_string(n));
  Codeword c(n, p.field().zero());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] = p.coeffs()[i];
  return c;
}

Poly word_to_poly(const Codeword& c, const FieldSpec& f) { return Poly(f, c); }

Codeword cyclic_shift(const Codeword& c) {
  if (c.empty()) return c;
  Codeword out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[(i + 1) % c.size()] = c[i];
  return out;
}

std::size_t hamming_weight(const Codeword& c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](const FFElement& e) { return !e.is_zero(); }));
}

bool contains(const CyclicCodeSpec& code, const Codeword& c) {
  if (c.size() != code.n())
    throw Error(ErrorCode::LengthMismatch,
                "word length " + std::to_string(c.size()) + " != code length " + std::to_string(code.n()));
  return poly_mod(word_to_poly(c, code.field()), code.gen()).is_zero();
}

std::vector<Codeword> basis_words(const CyclicCodeSpec& code) {
  std::vector<Codeword> out;
  out.reserve(code.k());
  Codeword g = poly_to_word(code.gen(), code.n());
  for (std::size_t i = 0; i < code.k(); ++i) {
    out.push_back(g);
    g = cyclic_shift(g);
  }
  return out;
}

CodewordEnumerator::CodewordEnumerator(const CyclicCodeSpec& code, std::uint64_t cap) : code_(code) {
  const std::uint64_t q = code.field().order();
  total_ = 1;
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (total_ > cap / q)
      throw Error(ErrorCode::TooLarge, "q^k exceeds the enumeration cap of " + std::to_string(cap));
    total_ *= q;
  }
  basis_ = basis_words(code);
  digits_.assign(code.k(), 0);
  current_.assign(code.n(), code.field().zero());
}

bool CodewordEnumerator::next(Codeword& out) {
  if (emitted_ == total_) return false;
  const auto& f = code_.field();
  if (emitted_ > 0) {
    // Odometer step on the message with m_{k-1} fastest; update the word by
    // the coefficient difference of each digit that changed.
    for (std::size_t pos = code_.k(); pos-- > 0;) {
      const std::uint64_t old_digit = digits_[pos];
      const std::uint64_t new_digit = (old_digit + 1) % f.order();
      digits_[pos] = new_digit;
      const FFElement delta = ff_sub(f.from_index(new_digit), f.from_index(old_digit), f);
      for (std::size_t i = 0; i < current_.size(); ++i)
        if (!basis_[pos][i].is_zero()) current_[i] = ff_add(current_[i], ff_mul(delta, basis_[pos][i], f), f);
      if (new_digit != 0) break;
    }
  }
  ++emitted_;
  out = current_;
  return true;
}

std::vector<Codeword> enumerate_codewords(const CyclicCodeSpec& code, std::uint64_t cap) {
  CodewordEnumerator e(code, cap);
  std::vector<Codeword> out;
  out.reserve(e.size());
  Codeword c;
  while (e.next(c)) out.push_back(c);
  return out;
}

std::size_t min_distance(const CyclicCodeSpec& code, std::uint64_t cap) {
  if (code.k() == 0) throw Error(ErrorCode::ZeroCode, "the zero code has no minimum distance");
  CodewordEnumerator e(code, cap);
  std::size_t best = code.n();
  Codeword c;
  while (e.next(c)) {
    const std::size_t w = hamming_weight(c);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

MatrixRep matrix_rep(const Codeword& c, Layout layout, std::size_t block) {
  const std::size_t n = c.size();
  if (block == 0 || n % block != 0)
    throw Error(ErrorCode::NotADivisorOfLength,
                std::to_string(block) + " does not divide length " + std::to_string(n));
  MatrixRep m;
  m.layout = layout;
  if (layout == Layout::RowBlocks) {
    m.cols = block;
    m.rows = n / block;
  } else {
    m.rows = block;
    m.cols = n / block;
  }
  m.grid.assign(m.rows, std::vector<FFElement>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      m.grid[i][j] = layout == Layout::RowBlocks ? c[i * m.cols + j] : c[j * m.rows + i];
  return m;
}

Codeword flatten(const MatrixRep& m) {
  Codeword c(m.rows * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      (m.layout == Layout::RowBlocks ? c[i * m.cols + j] : c[j * m.rows + i]) = m.grid[i][j];
  return c;
}

}  // namespace cycperm
