#include <algorithm>
#include <numeric>
#include <optional>

#include "cycperm/error.hpp"
#include "cycperm/poly.hpp"

namespace cycperm {

namespace {

__extension__ using U128 = unsigned __int128;

// F_q arithmetic on index-encoded elements. Table-driven when q is small,
// otherwise routed through FFElement.
class BaseOps {
 public:
  explicit BaseOps(const FieldSpec& f) : f_(f) {
    if (f.order() <= FieldTables::kMaxOrder) tables_.emplace(f);
  }
  std::uint32_t q() const { return static_cast<std::uint32_t>(f_.order()); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (tables_) return tables_->add(a, b);
    return enc(ff_add(dec(a), dec(b), f_));
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (tables_) return tables_->sub(a, b);
    return enc(ff_sub(dec(a), dec(b), f_));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (tables_) return tables_->mul(a, b);
    return enc(ff_mul(dec(a), dec(b), f_));
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (tables_) return tables_->inv(a);
    return enc(ff_inv(dec(a), f_));
  }
  std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }
  FFElement dec(std::uint32_t a) const { return f_.from_index(a); }
  std::uint32_t enc(const FFElement& a) const { return static_cast<std::uint32_t>(f_.index_of(a)); }

 private:
  FieldSpec f_;
  std::optional<FieldTables> tables_;
};

// Dense polynomials over F_q in index encoding, ascending, trimmed.
using QPoly = std::vector<std::uint32_t>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b, const BaseOps& k) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

QPoly qmod(QPoly a, const QPoly& m, const BaseOps& k) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return a;
  const std::uint32_t li = k.inv(m.back());
  for (std::size_t d = a.size() - 1; d >= dm; --d) {
    if (a[d] != 0) {
      const std::uint32_t c = k.mul(a[d], li);
      for (std::size_t i = 0; i <= dm; ++i) a[d - dm + i] = k.sub(a[d - dm + i], k.mul(c, m[i]));
    }
    if (d == dm) break;
  }
  a.resize(dm);
  trim(a);
  return a;
}

QPoly qgcd(QPoly a, QPoly b, const BaseOps& k) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qmod(a, b, k);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

QPoly qpowmod(QPoly base, const BigInt& e, const QPoly& m, const BaseOps& k) {
  QPoly result = {1};
  base = qmod(base, m, k);
  if (e == 0) return qmod(result, m, k);
  const std::size_t bits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, i)) result = qmod(qmul(result, base, k), m, k);
    if (i + 1 < bits) base = qmod(qmul(base, base, k), m, k);
  }
  return result;
}

bool q_irreducible(const QPoly& m, const BaseOps& k) {
  const std::size_t deg = m.size() - 1;
  if (deg == 1) return true;
  const QPoly z = {0, 1};
  QPoly t = z;
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    t = qpowmod(t, BigInt(k.q()), m, k);
    QPoly diff = t;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = k.sub(diff[1], 1);
    trim(diff);
    if (qgcd(diff, m, k).size() > 1) return false;
  }
  return true;
}

// Smallest monic irreducible of degree m over F_q, same ordering as the
// default field modulus.
QPoly smallest_irreducible(std::size_t m, const BaseOps& k) {
  QPoly cand(m + 1, 0);
  cand[m] = 1;
  while (true) {
    if (q_irreducible(cand, k)) return cand;
    std::size_t i = 0;
    while (i < m && ++cand[i] == k.q()) cand[i++] = 0;
    if (i == m) throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
  }
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t x = q % n, m = 1;
  while (x != 1) {
    x = x * (q % n) % n;
    ++m;
  }
  return m;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "coset modulus must be >= 1");
  if (std::gcd(n, q) != 1)
    throw Error(ErrorCode::CharacteristicDividesN, "q and n must be coprime for cyclotomic cosets");
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint64_t> coset;
    std::uint64_t x = s;
    do {
      seen[x] = true;
      coset.push_back(x);
      x = static_cast<std::uint64_t>((static_cast<U128>(x) * q) % n);
    } while (x != s);
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<PolyFactor> factor_xn_minus_1(std::uint64_t n, const FieldSpec& f) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "length must be >= 1");
  std::uint64_t np = n, mult = 1;
  while (np % f.r() == 0) {
    np /= f.r();
    mult *= f.r();
  }
  const BaseOps k(f);
  const std::uint64_t q = f.order();
  const std::uint64_t m = mult_order(q, np);

  // Splitting field F_{q^m} = F_q[z]/(M).
  const QPoly M = smallest_irreducible(m, k);
  const BigInt field_size = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m));
  const BigInt cofactor = (field_size - 1) / np;

  // gamma: an element of order exactly n'.
  QPoly gamma;
  const auto primes = prime_divisors(np);
  for (BigInt idx = 1; idx < field_size; ++idx) {
    QPoly a(m, 0);
    BigInt v = idx;
    for (std::uint64_t i = 0; i < m; ++i) {
      a[i] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    trim(a);
    QPoly g = qpowmod(a, cofactor, M, k);
    bool ok = true;
    for (auto p : primes)
      if (qpowmod(g, BigInt(np / p), M, k) == QPoly{1}) ok = false;
    if (ok) {
      gamma = std::move(g);
      break;
    }
  }
  if (gamma.empty()) throw Error(ErrorCode::InvalidArgument, "no element of order n' found");

  std::vector<QPoly> powers(np);
  powers[0] = {1};
  for (std::uint64_t i = 1; i < np; ++i) powers[i] = qmod(qmul(powers[i - 1], gamma, k), M, k);

  std::vector<PolyFactor> out;
  for (const auto& coset : cyclotomic_cosets(np, q)) {
    // Coefficients live in the tower; each is a QPoly in z.
    std::vector<QPoly> prod = {QPoly{1}};
    for (auto i : coset) {
      std::vector<QPoly> next(prod.size() + 1);
      QPoly neg_root = powers[i];
      for (auto& c : neg_root) c = k.neg(c);
      for (std::size_t j = 0; j < prod.size(); ++j) {
        // (x - root) * prod: shift and subtract
        QPoly& up = next[j + 1];
        QPoly sum = prod[j];
        sum.resize(std::max(sum.size(), up.size()), 0);
        for (std::size_t t = 0; t < up.size(); ++t) sum[t] = k.add(sum[t], up[t]);
        trim(sum);
        up = std::move(sum);
        QPoly term = qmod(qmul(prod[j], neg_root, k), M, k);
        QPoly& lo = next[j];
        lo.resize(std::max(lo.size(), term.size()), 0);
        for (std::size_t t = 0; t < term.size(); ++t) lo[t] = k.add(lo[t], term[t]);
        trim(lo);
      }
      prod = std::move(next);
    }
    std::vector<FFElement> coeffs;
    coeffs.reserve(prod.size());
    for (const auto& c : prod) {
      if (c.size() > 1) throw Error(ErrorCode::InvalidArgument, "minimal polynomial left the base field");
      coeffs.push_back(f.from_index(c.empty() ? 0 : c[0]));
    }
    out.push_back({Poly(f, std::move(coeffs)), mult});
  }

  std::sort(out.begin(), out.end(), [&](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    for (int i = a.poly.degree(); i >= 0; --i) {
      auto x = f.index_of(a.poly.coeffs()[i]), y = f.index_of(b.poly.coeffs()[i]);
      if (x != y) return x < y;
    }
    return false;
  });
  return out;
}

}  // namespace cycperm
