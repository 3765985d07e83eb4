#include <gtest/gtest.h>

#include "cycperm/error.hpp"
#include "cycperm/group_expr.hpp"
#include "oracles.hpp"

using namespace cycperm;

namespace {

std::optional<Error> error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

BigInt ss_order(const GroupExpr& e, const FieldSpec& f = FieldSpec()) {
  return group_from_generators(materialize(e, f)).order();
}

}  // namespace

TEST(GroupExpr, ParseFormatRoundTrip) {
  for (const char* text : {"S(7)", "C(5)", "AGL1(5)", "PSL2_7", "C31xC5", "x(3,5)", "wr(S(2),PSL2_7,rows)",
                           "wr(wr(S(2),PSL2_7,rows),S(7),cols)", "per(7,[1,0,1,1])", "wr(per(7,[1,1,0,1]),S(2),cols)"}) {
    const GroupExpr e = parse_group_expr(text);
    EXPECT_EQ(format_group_expr(e), text);
    EXPECT_EQ(parse_group_expr(format_group_expr(e)), e);
  }
  EXPECT_EQ(parse_group_expr(" wr( S(2) , PSL2_7 , rows ) "), parse_group_expr("wr(S(2),PSL2_7,rows)"));
}

TEST(GroupExpr, Degrees) {
  EXPECT_EQ(parse_group_expr("wr(S(3),PSL2_7,rows)").degree(), 21u);
  EXPECT_EQ(parse_group_expr("wr(wr(S(2),C31xC5,rows),S(62),cols)").degree(), 3844u);
  EXPECT_EQ(parse_group_expr("x(7,31)").degree(), 217u);
}

TEST(GroupExpr, ParseErrors) {
  auto e = error_of([] { parse_group_expr("wr(S(2)"); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::SyntaxError);
  ASSERT_TRUE(e->offset());
  EXPECT_EQ(*e->offset(), 8u);
  e = error_of([] { parse_group_expr("Foo(3)"); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::SyntaxError);
  e = error_of([] { parse_group_expr("S(0)"); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::BadDegree);
  e = error_of([] { parse_group_expr("AGL1(6)"); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::BadDegree);
  e = error_of([] { parse_group_expr("wr(S(2),S(3))"); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::ArityError);
  e = error_of([] { materialize(parse_group_expr("x(3,6)")); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::NotCoprime);
}

TEST(GroupExpr, NamedOrders) {
  EXPECT_EQ(symbolic_order(parse_group_expr("PSL2_7")), BigInt(168));
  EXPECT_EQ(symbolic_order(parse_group_expr("C31xC5")), BigInt(155));
  EXPECT_EQ(symbolic_order(parse_group_expr("AGL1(5)")), BigInt(20));
  EXPECT_EQ(symbolic_order(parse_group_expr("x(3,5)")), BigInt(720));
  for (const char* t : {"PSL2_7", "C31xC5", "AGL1(5)", "AGL1(11)", "C(9)", "S(6)", "x(3,5)", "x(4,5)"})
    EXPECT_EQ(ss_order(parse_group_expr(t)), symbolic_order(parse_group_expr(t))) << t;
}

TEST(GroupExpr, WreathOrderFormula) {
  // |A wr H| = |A|^deg(H) |H|
  const auto e = parse_group_expr("wr(S(3),PSL2_7,rows)");
  BigInt want = 168;
  for (int i = 0; i < 7; ++i) want *= 6;
  EXPECT_EQ(symbolic_order(e), want);
  EXPECT_EQ(symbolic_order(e), BigInt(47029248));
  EXPECT_EQ(ss_order(e), want);
  EXPECT_EQ(symbolic_order(parse_group_expr("wr(C31xC5,S(2),cols)")), BigInt(48050));
  BigInt w49 = factorial(7);
  for (int i = 0; i < 7; ++i) w49 *= 168;
  EXPECT_EQ(symbolic_order(parse_group_expr("wr(PSL2_7,S(7),cols)")), w49);
}

TEST(GroupExpr, LayoutsGiveTheSameGroup) {
  for (const char* pair : {"S(3),S(2)", "PSL2_7,S(2)", "C(4),AGL1(3)"}) {
    const auto rows = parse_group_expr(std::string("wr(") + pair + ",rows)");
    const auto cols = parse_group_expr(std::string("wr(") + pair + ",cols)");
    EXPECT_TRUE(groups_equal(group_from_generators(materialize(rows)), group_from_generators(materialize(cols))));
  }
}

TEST(GroupExpr, WreathGeneratorListing) {
  const auto gens = wreath_generators(named_group_generators("Sym", 2), 2, named_group_generators("Sym", 3), 3,
                                      Layout::RowBlocks);
  std::vector<std::string> text;
  for (const auto& g : gens) text.push_back(format_cycles(g));
  EXPECT_EQ(text, (std::vector<std::string>{"(0 3)", "(1 4)", "(2 5)", "(0 1)(3 4)", "(0 1 2)(3 4 5)"}));
  EXPECT_EQ(group_from_generators(gens).order(), BigInt(48));
  EXPECT_EQ(error_of([] { wreath_generators({}, 2, named_group_generators("Sym", 3), 3, Layout::RowBlocks); })->code(),
            ErrorCode::EmptyGenerators);
}

TEST(GroupExpr, WreathBlocksAreResidueClasses) {
  // copies of A act on {h, deg(H)+h, ...}; H moves whole classes
  const auto gens = wreath_generators(named_group_generators("Sym", 3), 3, named_group_generators("Sym", 2), 2,
                                      Layout::ColBlocks);
  for (const auto& g : gens)
    for (std::uint32_t i = 0; i < 6; ++i)
      for (std::uint32_t j = 0; j < 6; ++j)
        if (i % 2 == j % 2) EXPECT_EQ(g(i) % 2, g(j) % 2);
  const PermGroup w = group_from_generators(gens);
  EXPECT_TRUE(w.contains(parse_cycles("(0 2)", 6)));
  EXPECT_FALSE(w.contains(parse_cycles("(0 1)", 6)));
}

TEST(GroupExpr, CrtEmbedding) {
  const auto gens = crt_product_generators(3, 5);
  const PermGroup g = group_from_generators(gens);
  EXPECT_EQ(g.order(), BigInt(720));
  // every element respects k -> (k mod 3, k mod 5) coordinatewise
  for (const auto& s : gens)
    for (std::uint32_t i = 0; i < 15; ++i)
      for (std::uint32_t j = 0; j < 15; ++j) {
        if (i % 3 == j % 3) EXPECT_EQ(s(i) % 3, s(j) % 3);
        if (i % 5 == j % 5) EXPECT_EQ(s(i) % 5, s(j) % 5);
      }
  EXPECT_EQ(error_of([] { crt_product_generators(3, 9); })->code(), ErrorCode::NotCoprime);
  const Permutation& t = gens.front();  // (0 1) on the mod-3 coordinate
  EXPECT_EQ(t(0), 10u);
  EXPECT_EQ(t(3), 13u);
  // lifts from different factors commute; the first two generators come from S_3
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 2; b < gens.size(); ++b) EXPECT_EQ(compose(gens[a], gens[b]), compose(gens[b], gens[a]));
}

TEST(GroupExpr, PerLeaves) {
  const FieldSpec f2;
  const auto a = parse_group_expr("per(7,[1,1,0,1])");
  const auto b = parse_group_expr("per(7,[1,0,1,1])");
  EXPECT_EQ(symbolic_order(a, f2), BigInt(168));
  EXPECT_EQ(symbolic_order(b, f2), BigInt(168));
  EXPECT_TRUE(groups_equal(group_from_generators(materialize(a, f2)),
                           group_from_generators(materialize(parse_group_expr("PSL2_7"), f2))));
  EXPECT_FALSE(groups_equal(group_from_generators(materialize(a, f2)), group_from_generators(materialize(b, f2))));
  // over F_3 the same text is a different code
  EXPECT_EQ(error_of([] { symbolic_order(parse_group_expr("per(7,[1,1,0,1])"), make_field(3)); })->code(),
            ErrorCode::NotADivisor);
}

TEST(GroupExpr, SmallGeneratingSet) {
  const auto gens = materialize(parse_group_expr("wr(S(3),S(3),rows)"));
  const auto small = small_generating_set(gens);
  EXPECT_LE(small.size(), gens.size());
  EXPECT_TRUE(groups_equal(group_from_generators(gens), group_from_generators(small)));
}

TEST(GroupExpr, NamedGeneratorErrors) {
  EXPECT_EQ(error_of([] { named_group_generators("Mathieu", 23); })->code(), ErrorCode::UnknownTag);
  EXPECT_EQ(error_of([] { named_group_generators("PSL2_7", 8); })->code(), ErrorCode::BadDegree);
}
