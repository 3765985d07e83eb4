#include <algorithm>
#include <map>
#include <numeric>

#include "code_kernel.hpp"
#include "cycperm/autgroup.hpp"
#include "cycperm/error.hpp"
#include "cycperm/group_expr.hpp"

namespace cycperm {

namespace {

constexpr std::size_t kPairSample = 4096;

// All codewords of `code`, index-encoded, row-major (size() words of n bytes).
std::vector<std::uint8_t> enumerate_encoded(const CyclicCodeSpec& code, const FieldTables& t, std::uint64_t cap,
                                            std::uint64_t& count) {
  const std::size_t n = code.n(), k = code.k();
  const std::uint32_t q = t.q();
  count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > cap / q) throw Error(ErrorCode::TooLarge, "codeword enumeration exceeds cap " + std::to_string(cap));
    count *= q;
  }
  std::vector<std::uint8_t> g(n, 0);
  for (std::size_t i = 0; i < code.gen().coeffs().size(); ++i)
    g[i] = static_cast<std::uint8_t>(code.field().index_of(code.gen().coeffs()[i]));
  std::vector<std::uint8_t> out(count * n, 0);
  std::vector<std::uint8_t> cur(n, 0), digits(k, 0);
  for (std::uint64_t w = 1; w < count; ++w) {
    for (std::size_t pos = k; pos-- > 0;) {
      const std::uint8_t old_d = digits[pos];
      const auto new_d = static_cast<std::uint8_t>((old_d + 1) % q);
      digits[pos] = new_d;
      const std::uint8_t delta = t.sub(new_d, old_d);
      // basis word pos is g shifted by pos
      for (std::size_t j = 0; j + pos < n; ++j)
        if (g[j]) cur[j + pos] = t.add(cur[j + pos], t.mul(delta, g[j]));
      if (new_d != 0) break;
    }
    std::copy(cur.begin(), cur.end(), out.begin() + static_cast<std::ptrdiff_t>(w * n));
  }
  return out;
}

template <class Key>
std::vector<std::uint32_t> assign_ids(const std::vector<Key>& keys) {
  std::map<Key, std::uint32_t> ids;
  std::vector<std::uint32_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto it = ids.try_emplace(keys[i], static_cast<std::uint32_t>(ids.size())).first;
    out[i] = it->second;
  }
  return out;
}

class Search {
 public:
  Search(const CyclicCodeSpec& code, std::uint64_t cap) : n_(code.n()) {
    // Work with whichever of C, C-dual has fewer words; Per(C) = Per(C-dual).
    const std::size_t k = code.k();
    const bool use_dual = n_ - k < k;
    const CyclicCodeSpec gcode = use_dual ? dual_code(code) : code;
    const CyclicCodeSpec dcode = use_dual ? code : dual_code(code);
    const FieldTables t(code.field());
    tables_ = &t;
    kg_ = gcode.k();
    binary_ = t.q() == 2;
    words_ = (kg_ + 63) / 64;

    std::uint64_t count = 0;
    const auto words = enumerate_encoded(gcode, t, cap, count);
    build_columns(gcode, t);
    build_rows(dcode, t);
    build_invariants(words, count, t.q());
    run();
    tables_ = nullptr;
  }

  std::vector<Permutation> generators() const { return found_; }

 private:
  std::size_t n_, kg_ = 0, words_ = 0;
  bool binary_ = false;
  const FieldTables* tables_ = nullptr;  // valid only while the constructor runs

  std::vector<std::uint64_t> colbits_;  // n x words_
  std::vector<std::uint8_t> colbytes_;  // n x kg_
  std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> rows_;  // row r has last position kg_ + r

  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> pair_;  // n x n

  std::vector<Permutation> found_;
  std::vector<std::uint32_t> sigma_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> accbits_;
  std::vector<std::uint8_t> accbytes_;

  void build_columns(const CyclicCodeSpec& gcode, const FieldTables&) {
    std::vector<std::uint8_t> g(n_, 0);
    for (std::size_t i = 0; i < gcode.gen().coeffs().size(); ++i)
      g[i] = static_cast<std::uint8_t>(gcode.field().index_of(gcode.gen().coeffs()[i]));
    // Column s holds coordinate s of every basis word x^i g.
    if (binary_) colbits_.assign(n_ * words_, 0);
    else colbytes_.assign(n_ * kg_, 0);
    for (std::size_t i = 0; i < kg_; ++i)
      for (std::size_t j = 0; j + i < n_; ++j) {
        if (!g[j]) continue;
        const std::size_t s = j + i;
        if (binary_) colbits_[s * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
        else colbytes_[s * kg_ + i] = g[j];
      }
    accbits_.assign(words_, 0);
    accbytes_.assign(kg_, 0);
  }

  void build_rows(const CyclicCodeSpec& dcode, const FieldTables&) {
    std::vector<std::pair<std::uint32_t, std::uint8_t>> h;
    for (std::size_t i = 0; i < dcode.gen().coeffs().size(); ++i) {
      const auto v = static_cast<std::uint8_t>(dcode.field().index_of(dcode.gen().coeffs()[i]));
      if (v) h.emplace_back(static_cast<std::uint32_t>(i), v);
    }
    rows_.resize(dcode.k());
    for (std::size_t r = 0; r < dcode.k(); ++r) {
      rows_[r] = h;
      for (auto& [e, v] : rows_[r]) e += static_cast<std::uint32_t>(r);
    }
  }

  void build_invariants(const std::vector<std::uint8_t>& words, std::uint64_t count, std::uint32_t q) {
    std::vector<std::uint32_t> weight(count);
    for (std::uint64_t w = 0; w < count; ++w)
      weight[w] = static_cast<std::uint32_t>(
          std::count_if(words.begin() + static_cast<std::ptrdiff_t>(w * n_),
                        words.begin() + static_cast<std::ptrdiff_t>((w + 1) * n_), [](std::uint8_t v) { return v != 0; }));

    // Coordinate colors: counts over (weight, value).
    std::vector<std::vector<std::uint32_t>> ckeys(n_, std::vector<std::uint32_t>((n_ + 1) * q, 0));
    for (std::uint64_t w = 0; w < count; ++w)
      for (std::size_t i = 0; i < n_; ++i) ++ckeys[i][weight[w] * q + words[w * n_ + i]];
    color_ = assign_ids(ckeys);

    // Pair invariants from the lightest words: all words up to the smallest
    // weight bound that reaches the sample size, so the set is canonical.
    std::vector<std::uint32_t> sorted_w = weight;
    std::sort(sorted_w.begin(), sorted_w.end());
    const std::uint32_t bound = sorted_w[std::min<std::uint64_t>(count, kPairSample) - 1];
    std::vector<std::uint64_t> sample;
    for (std::uint64_t w = 0; w < count; ++w)
      if (weight[w] <= bound) sample.push_back(w);
    std::vector<std::vector<std::uint64_t>> pkeys(n_ * n_);
    for (auto w : sample) {
      const std::uint8_t* c = &words[w * n_];
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
          if (c[i] == 0 && c[j] == 0) continue;
          pkeys[i * n_ + j].push_back((std::uint64_t{weight[w]} * q + c[i]) * q + c[j]);
        }
    }
    for (auto& v : pkeys) std::sort(v.begin(), v.end());
    pair_ = assign_ids(pkeys);

    // Two refinement rounds.
    for (int round = 0; round < 2; ++round) {
      std::vector<std::vector<std::uint64_t>> keys(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        std::vector<std::uint64_t> nb;
        for (std::size_t j = 0; j < n_; ++j)
          if (j != i) nb.push_back((std::uint64_t{pair_[i * n_ + j]} << 32) | color_[j]);
        std::sort(nb.begin(), nb.end());
        keys[i].push_back(color_[i]);
        keys[i].insert(keys[i].end(), nb.begin(), nb.end());
      }
      color_ = assign_ids(keys);
    }
  }

  bool row_ok(std::size_t r) {
    const auto& row = rows_[r];
    if (binary_) {
      if (words_ == 1) {
        std::uint64_t acc = 0;
        for (const auto& [e, v] : row) acc ^= colbits_[sigma_[e]];
        return acc == 0;
      }
      std::fill(accbits_.begin(), accbits_.end(), 0);
      for (const auto& [e, v] : row) {
        const std::uint64_t* col = &colbits_[sigma_[e] * words_];
        for (std::size_t w = 0; w < words_; ++w) accbits_[w] ^= col[w];
      }
      for (auto w : accbits_)
        if (w) return false;
      return true;
    }
    std::fill(accbytes_.begin(), accbytes_.end(), 0);
    for (const auto& [e, v] : row) {
      const std::uint8_t* col = &colbytes_[sigma_[e] * kg_];
      for (std::size_t i = 0; i < kg_; ++i)
        if (col[i]) accbytes_[i] = tables_->add(accbytes_[i], tables_->mul(v, col[i]));
    }
    for (auto a : accbytes_)
      if (a) return false;
    return true;
  }

  // Can coordinate pos go to y, given sigma on [0, pos)?
  bool consistent(std::size_t pos, std::uint32_t y) const {
    if (color_[pos] != color_[y]) return false;
    for (std::size_t z = 0; z < pos; ++z)
      if (pair_[pos * n_ + z] != pair_[y * n_ + sigma_[z]]) return false;
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == n_) return true;
    for (std::uint32_t y = 0; y < n_; ++y) {
      if (used_[y] || !consistent(pos, y)) continue;
      sigma_[pos] = y;
      if (pos >= kg_ && !row_ok(pos - kg_)) continue;
      used_[y] = true;
      if (extend(pos + 1)) return true;
      used_[y] = false;
    }
    return false;
  }

  std::vector<bool> orbit_of(std::size_t d) const {
    std::vector<bool> in(n_, false);
    std::vector<std::uint32_t> queue = {static_cast<std::uint32_t>(d)};
    in[d] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : found_) {
        const auto y = g(queue[i]);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    return in;
  }

  void run() {
    sigma_.assign(n_, 0);
    used_.assign(n_, false);
    // Level d looks for elements fixing 0..d-1 and moving d; everything
    // found at deeper levels already fixes 0..d-1.
    for (std::size_t d = n_; d-- > 0;) {
      auto orbit = orbit_of(d);
      for (std::uint32_t gamma = static_cast<std::uint32_t>(d) + 1; gamma < n_; ++gamma) {
        if (orbit[gamma]) continue;
        std::fill(used_.begin(), used_.end(), false);
        for (std::size_t z = 0; z < d; ++z) {
          sigma_[z] = static_cast<std::uint32_t>(z);
          used_[z] = true;
        }
        if (!consistent(d, gamma)) continue;
        sigma_[d] = gamma;
        if (d >= kg_ && !row_ok(d - kg_)) continue;
        used_[gamma] = true;
        if (!extend(d + 1)) continue;
        found_.emplace_back(sigma_);
        orbit = orbit_of(d);
      }
    }
  }
};

}  // namespace

PermGroup backtrack_per_group(const CyclicCodeSpec& code, std::uint64_t cap) {
  const std::size_t n = code.n();
  if (code.k() == 0 || code.k() == n) return group_from_generators(named_group_generators("Sym", n));
  Search search(code, cap);
  PermGroup g(n);
  for (const auto& s : search.generators()) {
    if (!preserves_code(code, s))
      throw Error(ErrorCode::InvalidArgument, "backtrack produced a non-automorphism " + format_cycles(s));
    g.add_generator(s);
  }
  return g;
}

}  // namespace cycperm
