#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "cycperm/error.hpp"
#include "cycperm/group_expr.hpp"
#include "cycperm/permutation.hpp"
#include "cycperm/random.hpp"
#include "oracles.hpp"

using namespace cycperm;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

Permutation cyc(std::string_view text, std::size_t n) { return parse_cycles(text, n); }

}  // namespace

TEST(Permutation, Validation) {
  EXPECT_EQ(code_of([] { Permutation({0, 0, 1}); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { Permutation({0, 3, 1}); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { parse_cycles("(0 1)(1 2)", 3); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { parse_cycles("(0 5)", 3); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { parse_cycles("(0 1", 3); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { compose(Permutation::identity(2), Permutation::identity(3)); }), ErrorCode::DegreeMismatch);
}

TEST(Permutation, ComposeConvention) {
  const auto s = cyc("(0 1)", 3), t = cyc("(1 2)", 3);
  // compose(s, t)(i) = s(t(i)): 1 -> 2 -> 2, 2 -> 1 -> 0
  const auto st = compose(s, t);
  EXPECT_EQ(st(0), 1u);
  EXPECT_EQ(st(1), 2u);
  EXPECT_EQ(st(2), 0u);
  EXPECT_EQ(format_cycles(st), "(0 1 2)");
}

TEST(Permutation, RightActionOnWords) {
  const FieldSpec f = make_field(5);
  Codeword c;
  for (int i = 0; i < 4; ++i) c.push_back(f.from_integer(i));
  const auto s = cyc("(0 1 2 3)", 4);
  const auto cs = apply_perm(c, s);
  // result[i] = c[s(i)]
  EXPECT_EQ(cs[0], f.from_integer(1));
  EXPECT_EQ(cs[3], f.from_integer(0));
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_permutation(4, rng), b = random_permutation(4, rng);
    EXPECT_EQ(apply_perm(apply_perm(c, a), b), apply_perm(c, compose(a, b)));
  }
}

TEST(Permutation, InversePowerOrder) {
  const auto s = cyc("(0 1 2)(3 4)", 6);
  EXPECT_TRUE(compose(s, inverse(s)).is_identity());
  EXPECT_EQ(perm_order(s), BigInt(6));
  EXPECT_EQ(perm_pow(s, 6), Permutation::identity(6));
  EXPECT_EQ(perm_pow(s, -1), inverse(s));
  EXPECT_EQ(perm_pow(s, 2), compose(s, s));
  EXPECT_EQ(format_cycles(Permutation::identity(4)), "()");
  EXPECT_EQ(parse_cycles("()", 4), Permutation::identity(4));
}

TEST(Permutation, CycleTextRoundTrip) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto s = random_permutation(1 + rng.below(30), rng);
    EXPECT_EQ(parse_cycles(format_cycles(s), s.degree()), s);
  }
}

TEST(PermGroup, OrdersMatchClosureOracle) {
  const std::vector<std::vector<Permutation>> groups = {
      {cyc("(0 1)", 5), cyc("(0 1 2 3 4)", 5)},
      {cyc("(0 1 2 3 4 5)", 6), cyc("(1 5)(2 4)", 6)},
      {cyc("(0 1 2)", 6), cyc("(3 4 5)", 6)},
      named_group_generators("PSL2_7", 7),
      named_group_generators("AGL1", 7),
      crt_product_generators(2, 3),
      wreath_generators(named_group_generators("Sym", 2), 2, named_group_generators("Sym", 3), 3, Layout::RowBlocks),
      {cyc("(0 1)(2 3)(4 5)(6 7)", 8), cyc("(0 2 4 6)", 8)},
  };
  for (const auto& gens : groups) {
    const std::size_t n = gens.front().degree();
    const auto elements = oracle::closure(gens, n);
    const PermGroup g = group_from_generators(gens);
    EXPECT_EQ(g.order(), BigInt(elements.size()));
    BigInt prod = 1;
    for (auto s : g.basic_orbit_sizes()) prod *= s;
    EXPECT_EQ(prod, g.order());
    // membership agrees with the closure on all of S_n
    std::vector<std::uint32_t> im(n);
    std::iota(im.begin(), im.end(), 0u);
    do {
      EXPECT_EQ(g.contains(Permutation(im)), elements.count(im) > 0);
    } while (std::next_permutation(im.begin(), im.end()));
  }
}

TEST(PermGroup, IncrementalAndEquality) {
  PermGroup g(5);
  EXPECT_EQ(g.order(), BigInt(1));
  EXPECT_TRUE(g.add_generator(cyc("(0 1 2 3 4)", 5)));
  EXPECT_FALSE(g.add_generator(cyc("(0 2 4 1 3)", 5)));
  EXPECT_EQ(g.order(), BigInt(5));
  EXPECT_TRUE(g.add_generator(cyc("(0 1)", 5)));
  EXPECT_EQ(g.order(), BigInt(120));
  EXPECT_TRUE(groups_equal(g, group_from_generators(named_group_generators("Sym", 5))));
  EXPECT_FALSE(groups_equal(g, group_from_generators(named_group_generators("AGL1", 5))));
  EXPECT_EQ(g.orbit(3).size(), 5u);
  EXPECT_EQ(code_of([] { group_from_generators({}); }), ErrorCode::EmptyGenerators);
  EXPECT_EQ(code_of([&] { groups_equal(g, PermGroup(4)); }), ErrorCode::DegreeMismatch);
}

TEST(PermGroup, RandomElementsAreMembers) {
  const PermGroup g = group_from_generators(named_group_generators("PSL2_7", 7));
  Rng rng(3);
  auto pick = [&](std::uint64_t b) { return rng.below(b); };
  std::set<std::vector<std::uint32_t>> seen;
  for (int t = 0; t < 2000; ++t) {
    const auto s = g.random_element(pick);
    EXPECT_TRUE(g.contains(s));
    seen.insert(s.images());
  }
  EXPECT_EQ(seen.size(), 168u);
}

TEST(PermGroup, LargeSymmetricGroup) {
  const PermGroup g = group_from_generators(named_group_generators("Sym", 60));
  EXPECT_EQ(g.order(), factorial(60));
}
