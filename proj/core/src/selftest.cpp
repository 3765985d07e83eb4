#include "cycperm/selftest.hpp"

#include <chrono>
#include <optional>

#include "cycperm/autgroup.hpp"
#include "cycperm/cyclic_code.hpp"
#include "cycperm/error.hpp"
#include "cycperm/group_expr.hpp"
#include "cycperm/random.hpp"

namespace cycperm {

namespace {

using Failure = std::optional<std::string>;

FFElement random_element(const FieldSpec& f, Rng& rng) { return f.from_index(rng.below(f.order())); }

Failure field_axioms(const SelftestOptions& o, Rng& rng) {
  const std::vector<FieldSpec> fields = {make_field(2),    make_field(3),    make_field(5),    make_field(2, 2),
                                         make_field(2, 3), make_field(3, 2), make_field(2, 4), make_field(5, 2)};
  for (std::size_t t = 0; t < o.cases; ++t) {
    const FieldSpec& f = fields[t % fields.size()];
    const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
    const std::string where = " in F_" + f.descriptor();
    if (!(ff_add(a, b, f) == ff_add(b, a, f))) return "addition not commutative" + where;
    if (!(ff_mul(a, b, f) == ff_mul(b, a, f))) return "multiplication not commutative" + where;
    if (!(ff_add(ff_add(a, b, f), c, f) == ff_add(a, ff_add(b, c, f), f))) return "addition not associative" + where;
    if (!(ff_mul(ff_mul(a, b, f), c, f) == ff_mul(a, ff_mul(b, c, f), f)))
      return "multiplication not associative" + where;
    if (!(ff_mul(a, ff_add(b, c, f), f) == ff_add(ff_mul(a, b, f), ff_mul(a, c, f), f)))
      return "distributivity fails" + where;
    if (!ff_add(a, ff_neg(a, f), f).is_zero()) return "a + (-a) != 0" + where;
    if (!a.is_zero()) {
      if (!(ff_mul(a, ff_inv(a, f), f) == f.one())) return "a * a^-1 != 1" + where;
      if (!(ff_pow(a, f.order() - 1, f) == f.one())) return "a^(q-1) != 1" + where;
    }
  }
  return std::nullopt;
}

Failure factorization_identities(const SelftestOptions&, Rng&) {
  for (const auto& f : {make_field(2), make_field(3), make_field(2, 2)}) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      Poly prod = Poly::constant(f, f.one());
      for (const auto& pf : factor_xn_minus_1(n, f)) prod = prod * poly_pow(pf.poly, pf.multiplicity);
      if (!(prod == Poly::xn_minus_1(f, n)))
        return "factor product != x^" + std::to_string(n) + "-1 over F_" + f.descriptor();
    }
    const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{3, 5}, {3, 7}, {5, 7}};
    for (auto [p, q] : pairs) {
      if (p % f.r() == 0 || q % f.r() == 0) continue;
      const Poly rhs = Poly::from_ints(f, {-1, 1}) * cyclotomic(p, f) * cyclotomic(q, f) * cyclotomic(p * q, f);
      if (!(rhs == Poly::xn_minus_1(f, p * q)))
        return "x^" + std::to_string(p * q) + "-1 != (x-1)Q_p Q_q Q_pq over F_" + f.descriptor();
    }
  }
  return std::nullopt;
}

Failure action_coherence(const SelftestOptions& o, Rng& rng) {
  const FieldSpec f = make_field(3);
  for (std::size_t t = 0; t < o.cases; ++t) {
    const std::size_t n = 1 + rng.below(20);
    const Permutation s = random_permutation(n, rng), u = random_permutation(n, rng);
    Codeword c(n);
    for (auto& x : c) x = random_element(f, rng);
    const Permutation su = o.compose ? o.compose(s, u) : compose(s, u);
    if (apply_perm(apply_perm(c, s), u) != apply_perm(c, su))
      return "acting by " + format_cycles(s) + " then " + format_cycles(u) + " differs from acting by their composite";
  }
  return std::nullopt;
}

Failure dual_round_trip(const SelftestOptions& o, Rng& rng) {
  const std::vector<FieldSpec> fields = {make_field(2), make_field(3), make_field(2, 2)};
  std::vector<std::vector<std::vector<Poly>>> divisors(fields.size(), std::vector<std::vector<Poly>>(31));
  for (std::size_t t = 0; t < o.cases; ++t) {
    const std::size_t fi = rng.below(fields.size());
    const std::uint64_t n = 1 + rng.below(30);
    auto& d = divisors[fi][n];
    if (d.empty()) d = xn_minus_1_divisors(n, fields[fi]);
    const Poly& g = d[rng.below(d.size())];
    const CyclicCodeSpec code = make_code(fields[fi], n, g);
    const CyclicCodeSpec dual = dual_code(code);
    if (code.k() + dual.k() != n) return "dimensions of C and its dual do not sum to n=" + std::to_string(n);
    if (!(dual_code(dual).gen() == g))
      return "dual of dual differs for g=" + pretty_poly(g) + ", n=" + std::to_string(n);
  }
  return std::nullopt;
}

GroupExpr random_leaf(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return GroupExpr::sym(1 + rng.below(4));
    case 1: return GroupExpr::cyclic(2 + rng.below(4));
    case 2: return GroupExpr::agl1(rng.below(2) ? 3 : 5);
    default: return GroupExpr::crt(2, 3);
  }
}

Failure wreath_order_formula(const SelftestOptions& o, Rng& rng) {
  for (std::size_t t = 0; t < o.cases; ++t) {
    const GroupExpr a = random_leaf(rng), h = random_leaf(rng);
    const auto layout = rng.below(2) ? Layout::RowBlocks : Layout::ColBlocks;
    const GroupExpr w = GroupExpr::wreath(a, h, layout);
    if (w.degree() > 30) continue;
    const BigInt expected = pow(symbolic_order(a), static_cast<unsigned>(h.degree())) * symbolic_order(h);
    const BigInt got = group_from_generators(materialize(w)).order();
    if (got != expected)
      return format_group_expr(w) + " has order " + to_decimal(got) + ", formula gives " + to_decimal(expected);
  }
  return std::nullopt;
}

Failure crt_in_both_wreaths(const SelftestOptions& o, Rng& rng) {
  const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {2, 7}, {3, 7}};
  std::vector<PermGroup> crt, wr_pq, wr_qp;
  for (auto [p, q] : pairs) {
    crt.push_back(group_from_generators(crt_product_generators(p, q)));
    wr_pq.push_back(group_from_generators(
        materialize(GroupExpr::wreath(GroupExpr::sym(p), GroupExpr::sym(q), Layout::RowBlocks))));
    wr_qp.push_back(group_from_generators(
        materialize(GroupExpr::wreath(GroupExpr::sym(q), GroupExpr::sym(p), Layout::RowBlocks))));
  }
  auto pick = [&](std::uint64_t bound) { return rng.below(bound); };
  for (std::size_t t = 0; t < o.cases; ++t) {
    const std::size_t i = t % std::size(pairs);
    const Permutation s = crt[i].random_element(pick);
    if (!wr_pq[i].contains(s) || !wr_qp[i].contains(s))
      return format_cycles(s) + " in x(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) +
             ") escapes a wreath product";
  }
  return std::nullopt;
}

Failure oracle_equivalence(const SelftestOptions&, Rng&) {
  for (const auto& f : {make_field(2), make_field(3)})
    for (std::uint64_t n = 2; n <= 8; ++n)
      for (const auto& g : xn_minus_1_divisors(n, f)) {
        if (g.degree() <= 1) continue;
        const CyclicCodeSpec code = make_code(f, n, g);
        const PermGroup ex = exhaustive_per_group(code, 8, 1);
        const PermGroup bt = backtrack_per_group(code);
        if (!groups_equal(ex, bt))
          return "exhaustive and backtrack disagree on C_{" + std::to_string(n) + "," + pretty_poly(g) + "} over F_" +
                 f.descriptor() + ": " + to_decimal(ex.order()) + " vs " + to_decimal(bt.order());
        std::vector<std::uint32_t> shift(n);
        for (std::uint32_t i = 0; i < n; ++i) shift[i] = static_cast<std::uint32_t>((i + 1) % n);
        if (!ex.contains(Permutation(shift))) return "cyclic shift missing from Per(C)";
      }
  return std::nullopt;
}

// A wr H on contiguous blocks: point (h, a) at h * deg(A) + a.
std::vector<Permutation> contiguous_wreath(const GroupExpr& a, const GroupExpr& h) {
  const auto ag = materialize(a), hg = materialize(h);
  const std::size_t da = a.degree(), dh = h.degree();
  std::vector<Permutation> out;
  for (std::size_t b = 0; b < dh; ++b)
    for (const auto& s : ag) {
      std::vector<std::uint32_t> im(da * dh);
      for (std::size_t i = 0; i < im.size(); ++i) im[i] = static_cast<std::uint32_t>(i);
      for (std::size_t x = 0; x < da; ++x) im[b * da + x] = static_cast<std::uint32_t>(b * da + s(x));
      out.emplace_back(std::move(im));
    }
  for (const auto& s : hg) {
    std::vector<std::uint32_t> im(da * dh);
    for (std::size_t b = 0; b < dh; ++b)
      for (std::size_t x = 0; x < da; ++x) im[b * da + x] = static_cast<std::uint32_t>(s(b) * da + x);
    out.emplace_back(std::move(im));
  }
  return out;
}

Failure wreath_desk_checks(const SelftestOptions& o, Rng&) {
  const FieldSpec f;
  struct Case {
    std::uint64_t n;
    const char* gen;
    std::uint64_t a, h;
  };
  for (const Case& c : {Case{6, "Q3(x^2)", 3, 2}, Case{9, "Q3(x^3)", 3, 3}}) {
    const CyclicCodeSpec code = make_code(f, c.n, parse_poly_expr(c.gen, f));
    const GroupExpr a = GroupExpr::sym(c.a), h = GroupExpr::sym(c.h);
    const auto gens = o.transpose_wreath ? contiguous_wreath(a, h) : materialize(GroupExpr::wreath(a, h, Layout::ColBlocks));
    const PermGroup ex = exhaustive_per_group(code, 9, 1);
    if (!groups_equal(ex, group_from_generators(gens)))
      return std::string("Per(C_{") + std::to_string(c.n) + "," + c.gen + "}) differs from S_" + std::to_string(c.a) +
             " wr S_" + std::to_string(c.h);
  }
  return std::nullopt;
}

}  // namespace

bool SelftestResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<Poly> xn_minus_1_divisors(std::uint64_t n, const FieldSpec& f) {
  std::vector<Poly> out = {Poly::constant(f, f.one())};
  for (const auto& pf : factor_xn_minus_1(n, f)) {
    std::vector<Poly> next;
    for (const auto& d : out) {
      Poly cur = d;
      next.push_back(cur);
      for (std::uint64_t e = 1; e <= pf.multiplicity; ++e) {
        cur = cur * pf.poly;
        next.push_back(cur);
      }
    }
    out = std::move(next);
  }
  return out;
}

SelftestResult run_selftest(const SelftestOptions& options) {
  using Clock = std::chrono::steady_clock;
  struct Entry {
    const char* name;
    Failure (*fn)(const SelftestOptions&, Rng&);
  };
  const Entry entries[] = {
      {"field_axioms", field_axioms},
      {"factorization_identities", factorization_identities},
      {"action_coherence", action_coherence},
      {"dual_round_trip", dual_round_trip},
      {"wreath_order_formula", wreath_order_formula},
      {"crt_in_both_wreaths", crt_in_both_wreaths},
      {"oracle_equivalence", oracle_equivalence},
      {"wreath_desk_checks", wreath_desk_checks},
  };
  SelftestResult result;
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    Rng rng(options.seed + i);
    SelftestCheck check;
    check.name = entries[i].name;
    const auto start = Clock::now();
    try {
      if (auto fail = entries[i].fn(options, rng)) {
        check.passed = false;
        check.detail = *fail;
      }
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = std::string("exception: ") + e.what();
    }
    check.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    result.checks.push_back(std::move(check));
  }
  return result;
}

}  // namespace cycperm
