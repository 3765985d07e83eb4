#include <numeric>
#include <optional>

#include "cycperm/autgroup.hpp"
#include "cycperm/error.hpp"

namespace cycperm {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly x_minus_1(const FieldSpec& f) { return Poly::from_ints(f, {-1, 1}); }

bool is_repetition_generator(const Poly& g, std::uint64_t n) {
  if (g.degree() != static_cast<int>(n) - 1) return false;
  for (const auto& c : g.coeffs())
    if (!(c == g.field().one())) return false;
  return true;
}

// Per(C_{p,g}) as a GroupExpr: a named group when it coincides with one,
// otherwise a per(...) leaf.
GroupExpr resolve_leaf(const FieldSpec& f, std::uint64_t p, const Poly& g) {
  if (g == x_minus_1(f) || is_repetition_generator(g, p)) return GroupExpr::sym(p);
  const PerLeaf& leaf = per_leaf(f, p, g);
  std::vector<GroupExpr> candidates = {GroupExpr::sym(p), GroupExpr::cyclic(p)};
  if (is_prime(p)) candidates.push_back(GroupExpr::agl1(p));
  if (p == 7) candidates.push_back(GroupExpr::named("PSL2_7"));
  if (p == 31) candidates.push_back(GroupExpr::named("C31xC5"));
  PermGroup actual = leaf.gens.empty() ? PermGroup(p) : group_from_generators(leaf.gens);
  for (const auto& c : candidates) {
    if (symbolic_order(c, f) != leaf.order) continue;
    if (groups_equal(actual, group_from_generators(materialize(c, f)))) return c;
  }
  return GroupExpr::per_of(p, format_poly(g));
}

// (c) n = pq with g in {Q_pq, (x-1) Q_p Q_q}; n = hpq with g = Q_p Q_q.
std::optional<GroupExpr> pattern_c(const CyclicCodeSpec& code) {
  const auto& f = code.field();
  const std::uint64_t n = code.n();
  const auto primes = prime_factors(n);
  for (std::size_t a = 0; a < primes.size(); ++a)
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      const std::uint64_t p = primes[a], q = primes[b];
      if (p == f.r() || q == f.r()) continue;
      const std::uint64_t h = n / (p * q);
      const Poly qp = cyclotomic(p, f), qq = cyclotomic(q, f);
      if (h == 1) {
        if (code.gen() == cyclotomic(p * q, f) || code.gen() == x_minus_1(f) * qp * qq) return GroupExpr::crt(p, q);
      } else if (code.gen() == qp * qq) {
        return GroupExpr::wreath(GroupExpr::sym(h), GroupExpr::crt(p, q), Layout::RowBlocks);
      }
    }
  return std::nullopt;
}

// (a) n = hp, p prime != char, g | x^p - 1, deg g > 1.
std::optional<GroupExpr> pattern_a(const CyclicCodeSpec& code) {
  const auto& f = code.field();
  const auto& g = code.gen();
  if (g.degree() <= 1) return std::nullopt;
  for (auto p : prime_factors(code.n())) {
    if (p == f.r()) continue;
    if (!poly_divides(g, Poly::xn_minus_1(f, p))) continue;
    const std::uint64_t h = code.n() / p;
    GroupExpr leaf = resolve_leaf(f, p, g);
    if (h == 1) return leaf;
    return GroupExpr::wreath(GroupExpr::sym(h), std::move(leaf), Layout::RowBlocks);
  }
  return std::nullopt;
}

std::optional<GroupExpr> predict_without_b(const CyclicCodeSpec& code);

// (b) g = g0(x^t) with t = r^u p^v and g0 | x^p - 1.
std::optional<GroupExpr> pattern_b(const CyclicCodeSpec& code) {
  const auto& f = code.field();
  const auto& g = code.gen();
  const std::uint64_t n = code.n();
  std::uint64_t t = n;
  for (std::size_t i = 0; i < g.coeffs().size(); ++i)
    if (!g.coeffs()[i].is_zero()) t = std::gcd(t, static_cast<std::uint64_t>(i));
  if (t <= 1 || g.degree() < 1) return std::nullopt;
  std::uint64_t rest = t;
  while (rest % f.r() == 0) rest /= f.r();
  const auto rest_primes = prime_factors(rest);
  if (rest_primes.size() > 1) return std::nullopt;

  std::vector<FFElement> c0;
  for (std::size_t i = 0; i < g.coeffs().size(); i += t) c0.push_back(g.coeffs()[i]);
  const Poly g0(f, std::move(c0));
  const std::uint64_t n0 = n / t;

  bool admissible = false;
  for (auto p : prime_factors(n0)) {
    if (p == f.r()) continue;
    if (!rest_primes.empty() && rest_primes.front() != p) continue;
    if (poly_divides(g0, Poly::xn_minus_1(f, p))) admissible = true;
  }
  if (!admissible) return std::nullopt;

  const CyclicCodeSpec inner_code = make_code(f, n0, g0);
  std::optional<GroupExpr> inner;
  if (g0 == x_minus_1(f) || is_repetition_generator(g0, n0)) inner = GroupExpr::sym(n0);
  else inner = predict_without_b(inner_code);
  if (!inner) return std::nullopt;
  return GroupExpr::wreath(std::move(*inner), GroupExpr::sym(t), Layout::ColBlocks);
}

std::optional<GroupExpr> predict_without_b(const CyclicCodeSpec& code) {
  if (auto c = pattern_c(code)) return c;
  return pattern_a(code);
}

}  // namespace

GroupExpr predicted_group(const CyclicCodeSpec& code) {
  std::vector<GroupExpr> matches;
  if (auto c = pattern_c(code)) matches.push_back(std::move(*c));
  if (auto b = pattern_b(code)) matches.push_back(std::move(*b));
  if (auto a = pattern_a(code)) matches.push_back(std::move(*a));
  if (matches.empty()) {
    std::string why = "no structural pattern matches C_{" + std::to_string(code.n()) + "," + pretty_poly(code.gen()) + "}";
    if (code.gen().degree() <= 1) why += " (generator degree must exceed 1)";
    if (code.n() % code.field().r() == 0) why += " (primes equal to the characteristic are excluded)";
    throw Error(ErrorCode::NoPattern, why);
  }
  const BigInt first = symbolic_order(matches.front(), code.field());
  for (std::size_t i = 1; i < matches.size(); ++i) {
    const BigInt other = symbolic_order(matches[i], code.field());
    if (other != first)
      throw Error(ErrorCode::AmbiguousPattern, format_group_expr(matches.front()) + " has order " + to_decimal(first) +
                                                   " but " + format_group_expr(matches[i]) + " has order " +
                                                   to_decimal(other));
  }
  return matches.front();
}

}  // namespace cycperm
