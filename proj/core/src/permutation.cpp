#include "cycperm/permutation.hpp"

#include <cctype>
#include <numeric>

#include "cycperm/error.hpp"

namespace cycperm {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error(ErrorCode::InvalidPermutation, "images do not form a bijection of {0.." +
                                                     std::to_string(images_.size()) + "-1}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (auto p : cyc) {
      if (p >= n) throw Error(ErrorCode::InvalidPermutation, "cycle point " + std::to_string(p) + " out of range");
      if (used[p]) throw Error(ErrorCode::InvalidPermutation, "point " + std::to_string(p) + " in two cycles");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) im[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw Error(ErrorCode::DegreeMismatch, "compose: degrees " + std::to_string(sigma.degree()) + " and " +
                                               std::to_string(tau.degree()));
  std::vector<std::uint32_t> im(tau.degree());
  const auto* s = sigma.images_.data();
  const auto* t = tau.images_.data();
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = s[t[i]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& sigma) {
  std::vector<std::uint32_t> im(sigma.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[sigma.images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation perm_pow(const Permutation& sigma, std::int64_t e) {
  Permutation base = e < 0 ? inverse(sigma) : sigma;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation result = Permutation::identity(sigma.degree());
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

BigInt perm_order(const Permutation& sigma) {
  BigInt order = 1;
  std::vector<bool> seen(sigma.degree(), false);
  for (std::uint32_t i = 0; i < sigma.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = sigma(j)) {
      seen[j] = true;
      ++len;
    }
    order = boost::multiprecision::lcm(order, BigInt(len));
  }
  return order;
}

Codeword apply_perm(const Codeword& c, const Permutation& sigma) {
  if (c.size() != sigma.degree())
    throw Error(ErrorCode::DegreeMismatch, "word length " + std::to_string(c.size()) + " vs permutation degree " +
                                               std::to_string(sigma.degree()));
  Codeword out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[sigma(static_cast<std::uint32_t>(i))];
  return out;
}

std::string format_cycles(const Permutation& sigma) {
  std::string out;
  std::vector<bool> seen(sigma.degree(), false);
  for (std::uint32_t i = 0; i < sigma.degree(); ++i) {
    if (seen[i] || sigma(i) == i) continue;
    out += '(';
    for (std::uint32_t j = i; !seen[j]; j = sigma(j)) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::SyntaxError, why + " in cycle notation '" + std::string(text) + "'", i + 1);
  };
  auto ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  ws();
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      ws();
      if (i >= text.size()) throw fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected point");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffu) throw fail("point too large");
        ++i;
      }
      cyc.push_back(static_cast<std::uint32_t>(v));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    ws();
  }
  return Permutation::from_cycles(n, cycles);
}

}  // namespace cycperm
