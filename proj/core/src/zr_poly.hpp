#pragma once

// Minimal dense polynomial helpers over the prime field Z_r, used only for
// modulus validation and inversion in the extension field.

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "cycperm/error.hpp"

namespace cycperm::zr {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t r) {
  std::int64_t t = 0, nt = 1, m = r, x = a % r;
  while (x != 0) {
    std::int64_t q = m / x;
    std::tie(t, nt) = std::pair(nt, t - q * nt);
    std::tie(m, x) = std::pair(x, m - q * x);
  }
  if (m != 1) throw Error(ErrorCode::DivisionByZero, "residue not invertible");
  if (t < 0) t += r;
  return static_cast<std::uint32_t>(t);
}

inline Poly sub(const Poly& a, const Poly& b, std::uint32_t r) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = static_cast<std::uint32_t>((x + r - y) % r);
  }
  trim(out);
  return out;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t r) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % r;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

// Returns (quotient, remainder); b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint32_t r) {
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {Poly{}, a};
  const std::uint64_t lead_inv = inv_mod(b.back(), r);
  Poly q(a.size() - b.size() + 1, 0);
  for (int d = degree(a); d >= db; --d) {
    const std::uint64_t c = a[d] * lead_inv % r;
    if (c == 0) continue;
    q[d - db] = static_cast<std::uint32_t>(c);
    for (int i = 0; i <= db; ++i) a[d - db + i] = static_cast<std::uint32_t>((a[d - db + i] + (r - c) * b[i]) % r);
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly mod(const Poly& a, const Poly& m, std::uint32_t r) { return divmod(a, m, r).second; }

inline Poly gcd(Poly a, Poly b, std::uint32_t r) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly rem = mod(a, b, r);
    a = std::move(b);
    b = std::move(rem);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv_mod(a.back(), r);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * li % r);
  }
  return a;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t r) {
  Poly result = {1};
  base = mod(base, m, r);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, r), m, r);
    e >>= 1;
    if (e) base = mod(mul(base, base, r), m, r);
  }
  return result;
}

// Inverse of a modulo m (m irreducible), via extended Euclid.
inline Poly inverse_mod(const Poly& a, const Poly& m, std::uint32_t r) {
  Poly old_r = mod(a, m, r), cur_r = m;
  Poly old_s = {1}, cur_s = {};
  trim(old_r);
  if (old_r.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // Invariant: old_s * a == old_r (mod m).
  while (!cur_r.empty()) {
    auto [q, rem] = divmod(old_r, cur_r, r);
    Poly next_s = sub(old_s, mul(q, cur_s, r), r);
    old_r = std::move(cur_r);
    cur_r = std::move(rem);
    old_s = std::move(cur_s);
    cur_s = std::move(next_s);
  }
  if (degree(old_r) != 0) throw Error(ErrorCode::DivisionByZero, "element not invertible");
  const std::uint64_t li = inv_mod(old_r[0], r);
  Poly out = mod(old_s, m, r);
  for (auto& c : out) c = static_cast<std::uint32_t>(c * li % r);
  return out;
}

}  // namespace cycperm::zr
