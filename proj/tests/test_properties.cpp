// Randomized invariants, 1000 cases each, fixed seeds.

#include <gtest/gtest.h>

#include <numeric>

#include "cycperm/autgroup.hpp"
#include "cycperm/group_expr.hpp"
#include "cycperm/random.hpp"
#include "cycperm/report_json.hpp"
#include "cycperm/selftest.hpp"
#include "oracles.hpp"

using namespace cycperm;

namespace {

constexpr int kCases = 1000;

FFElement rand_elt(const FieldSpec& f, Rng& rng) { return f.from_index(rng.below(f.order())); }

Poly rand_poly(const FieldSpec& f, Rng& rng, std::size_t max_deg) {
  std::vector<FFElement> c(1 + rng.below(max_deg + 1));
  for (auto& x : c) x = rand_elt(f, rng);
  return Poly(f, std::move(c));
}

GroupExpr rand_leaf(Rng& rng) {
  switch (rng.below(5)) {
    case 0: return GroupExpr::sym(1 + rng.below(4));
    case 1: return GroupExpr::cyclic(2 + rng.below(4));
    case 2: return GroupExpr::agl1(rng.below(2) ? 3 : 5);
    case 3: return GroupExpr::sym(2);
    default: return GroupExpr::cyclic(3);
  }
}

GroupExpr rand_tree(Rng& rng, int depth) {
  const auto layout = [&] { return rng.below(2) ? Layout::RowBlocks : Layout::ColBlocks; };
  if (depth == 0 || rng.below(3) == 0) {
    switch (rng.below(7)) {
      case 0: return GroupExpr::named("PSL2_7");
      case 1: return GroupExpr::crt(2 + rng.below(2), 5 + 2 * rng.below(2));
      case 2: return GroupExpr::per_of(7, rng.below(2) ? "1,1,0,1" : "1,0,1,1");
      case 3: return GroupExpr::named("C31xC5");
      default: return rand_leaf(rng);
    }
  }
  return GroupExpr::wreath(rand_tree(rng, depth - 1), rand_tree(rng, depth - 1), layout());
}

std::vector<std::uint64_t> cycle_lengths(const Permutation& s) {
  std::vector<bool> seen(s.degree(), false);
  std::vector<std::uint64_t> out;
  for (std::uint32_t i = 0; i < s.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = s(j), ++len) seen[j] = true;
    out.push_back(len);
  }
  return out;
}

}  // namespace

TEST(Properties, FieldMultiplicationMatchesSchoolbook) {
  const std::vector<FieldSpec> fields = {make_field(2, 3), make_field(3, 2), make_field(2, 4), make_field(5, 2),
                                         make_field(7), make_field(2, 2), make_field(3, 3)};
  Rng rng(101);
  for (int t = 0; t < kCases; ++t) {
    const FieldSpec& f = fields[t % fields.size()];
    const oracle::Vec m(f.modulus().begin(), f.modulus().end());
    const auto a = rand_elt(f, rng), b = rand_elt(f, rng), c = rand_elt(f, rng);
    EXPECT_EQ(ff_mul(a, b, f), oracle::from_vec(oracle::field_mul(oracle::to_vec(a), oracle::to_vec(b), m, f.r()), f));
    EXPECT_EQ(ff_mul(a, ff_add(b, c, f), f), ff_add(ff_mul(a, b, f), ff_mul(a, c, f), f));
    if (!a.is_zero()) EXPECT_EQ(ff_mul(a, ff_inv(a, f), f), f.one());
  }
}

TEST(Properties, ActionIsCoherentWithComposition) {
  Rng rng(102);
  const FieldSpec f = make_field(2, 2);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.below(30);
    const Permutation s = random_permutation(n, rng), u = random_permutation(n, rng);
    Codeword c(n);
    for (auto& x : c) x = rand_elt(f, rng);
    const Codeword cs = apply_perm(c, s);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(cs[i], c[s(static_cast<std::uint32_t>(i))]);
    EXPECT_EQ(apply_perm(cs, u), apply_perm(c, compose(s, u)));
    EXPECT_EQ(apply_perm(cs, inverse(s)), c);
  }
}

TEST(Properties, DualRoundTrip) {
  Rng rng(103);
  const std::vector<FieldSpec> fields = {make_field(2), make_field(3), make_field(2, 2)};
  std::map<std::pair<std::size_t, std::uint64_t>, std::vector<Poly>> cache;
  for (int t = 0; t < kCases; ++t) {
    const std::size_t fi = rng.below(fields.size());
    const FieldSpec& f = fields[fi];
    const std::uint64_t n = 1 + rng.below(24);
    auto& divs = cache[{fi, n}];
    if (divs.empty()) divs = xn_minus_1_divisors(n, f);
    const Poly g = divs[rng.below(divs.size())];
    // the full space and the zero code fall outside make_code's range
    if (g.degree() == 0 || static_cast<std::uint64_t>(g.degree()) == n) continue;
    const Poly h = check_polynomial(g, n);
    EXPECT_EQ(g * h, Poly::xn_minus_1(f, n));
    const Poly d = dual_generator(g, n);
    EXPECT_TRUE(poly_divides(d, Poly::xn_minus_1(f, n)));
    EXPECT_EQ(dual_generator(d, n), poly_monic(g));
    // every codeword is orthogonal to every dual codeword
    const auto code = make_code(f, n, g);
    const auto dual = dual_code(code);
    const auto cw = basis_words(code), dw = basis_words(dual);
    if (cw.empty() || dw.empty()) continue;
    const auto& x = cw[rng.below(cw.size())];
    const auto& y = dw[rng.below(dw.size())];
    FFElement dot = f.zero();
    for (std::size_t i = 0; i < n; ++i) dot = ff_add(dot, ff_mul(x[i], y[i], f), f);
    EXPECT_TRUE(dot.is_zero());
  }
}

TEST(Properties, WreathOrderFormula) {
  Rng rng(104);
  int closures = 0;
  for (int t = 0; t < kCases; ++t) {
    const GroupExpr a = rand_leaf(rng), h = rand_leaf(rng);
    const GroupExpr w = GroupExpr::wreath(a, h, rng.below(2) ? Layout::RowBlocks : Layout::ColBlocks);
    ASSERT_EQ(w.degree(), a.degree() * h.degree());
    const BigInt expected = pow(symbolic_order(a), static_cast<unsigned>(h.degree())) * symbolic_order(h);
    const auto gens = materialize(w);
    if (expected <= 2000 && closures < 200) {
      ++closures;
      EXPECT_EQ(BigInt(oracle::closure(gens, w.degree()).size()), expected) << format_group_expr(w);
    } else {
      EXPECT_EQ(group_from_generators(gens).order(), expected) << format_group_expr(w);
    }
  }
}

TEST(Properties, CrtElementsRespectBothResidues) {
  Rng rng(105);
  const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{2, 3}, {3, 4}, {3, 5}, {4, 5}, {2, 7}, {5, 7}};
  std::vector<PermGroup> crt, wr_pq, wr_qp;
  for (auto [p, q] : pairs) {
    crt.push_back(group_from_generators(crt_product_generators(p, q)));
    wr_pq.push_back(group_from_generators(materialize(parse_group_expr(
        "wr(S(" + std::to_string(p) + "),S(" + std::to_string(q) + "),rows)"))));
    wr_qp.push_back(group_from_generators(materialize(parse_group_expr(
        "wr(S(" + std::to_string(q) + "),S(" + std::to_string(p) + "),cols)"))));
  }
  auto pick = [&](std::uint64_t bound) { return rng.below(bound); };
  for (int t = 0; t < kCases; ++t) {
    const std::size_t i = t % std::size(pairs);
    const auto [p, q] = pairs[i];
    const Permutation s = crt[i].random_element(pick);
    // s induces well-defined maps on residues mod p and mod q
    for (std::uint32_t a = 0; a < p * q; ++a)
      for (std::uint32_t b = a + 1; b < p * q; ++b) {
        if (a % p == b % p) ASSERT_EQ(s(a) % p, s(b) % p);
        if (a % q == b % q) ASSERT_EQ(s(a) % q, s(b) % q);
      }
    EXPECT_TRUE(wr_pq[i].contains(s));
    EXPECT_TRUE(wr_qp[i].contains(s));
  }
}

TEST(Properties, GroupExprPrintParse) {
  Rng rng(106);
  for (int t = 0; t < kCases; ++t) {
    const GroupExpr e = rand_tree(rng, 3);
    const std::string text = format_group_expr(e);
    const GroupExpr back = parse_group_expr(text);
    EXPECT_EQ(back, e) << text;
    EXPECT_EQ(format_group_expr(back), text);
    EXPECT_EQ(back.degree(), e.degree());
  }
}

TEST(Properties, PolyDivisionIdentity) {
  Rng rng(107);
  const std::vector<FieldSpec> fields = {make_field(2), make_field(3), make_field(5), make_field(2, 2),
                                         make_field(3, 2)};
  for (int t = 0; t < kCases; ++t) {
    const FieldSpec& f = fields[t % fields.size()];
    const Poly a = rand_poly(f, rng, 20);
    Poly b = rand_poly(f, rng, 8);
    if (b.is_zero()) b = Poly::constant(f, f.one());
    const auto [q, r] = poly_divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
    const Poly g = poly_gcd(a, b);
    EXPECT_TRUE(poly_divides(g, a));
    EXPECT_TRUE(poly_divides(g, b));
  }
}

TEST(Properties, CyclesRoundTripAndOrder) {
  Rng rng(108);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.below(40);
    const Permutation s = random_permutation(n, rng);
    EXPECT_EQ(parse_cycles(format_cycles(s), n), s);
    std::uint64_t l = 1;
    for (auto len : cycle_lengths(s)) l = std::lcm(l, len);
    EXPECT_EQ(perm_order(s), BigInt(l));
    EXPECT_EQ(perm_pow(s, static_cast<std::int64_t>(l)), Permutation::identity(n));
  }
}

TEST(Properties, MembershipMatchesDivisibility) {
  Rng rng(109);
  const FieldSpec f = make_field(3);
  for (int t = 0; t < kCases; ++t) {
    const std::uint64_t n = 2 + rng.below(20);
    const auto divs = xn_minus_1_divisors(n, f);
    const Poly g = divs[rng.below(divs.size())];
    if (static_cast<std::uint64_t>(g.degree()) == n) continue;
    const auto code = make_code(f, n, g);
    // a multiple of g of degree < n is a codeword
    const std::size_t k = n - static_cast<std::size_t>(g.degree());
    const Poly m = poly_mod(rand_poly(f, rng, k - 1), Poly::monomial(f, k));
    EXPECT_TRUE(contains(code, poly_to_word(m * g, n)));
    Codeword w(n);
    for (auto& x : w) x = rand_elt(f, rng);
    EXPECT_EQ(contains(code, w), poly_divides(g, word_to_poly(w, f)));
    EXPECT_EQ(contains(code, w), contains(code, cyclic_shift(w)));
  }
}

TEST(Properties, ReportJsonRoundTrip) {
  Rng rng(110);
  const FieldSpec f2;
  const auto code = make_code(f2, 7, Poly::from_ints(f2, {1, 1, 0, 1}));
  for (int t = 0; t < kCases; ++t) {
    VerificationReport r = certify_subgroup(code, {random_permutation(7, rng)});
    r.elapsed_ms = static_cast<double>(rng.below(1u << 20)) / 64.0;
    if (rng.below(2)) r.counterexamples.push_back(random_permutation(7, rng));
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
  }
}
