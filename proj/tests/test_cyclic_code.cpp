#include <gtest/gtest.h>

#include <set>

#include "cycperm/cyclic_code.hpp"
#include "cycperm/error.hpp"
#include "oracles.hpp"

using namespace cycperm;

namespace {

Poly P(const FieldSpec& f, std::vector<std::int64_t> c) { return Poly::from_ints(f, c); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

// Every m(x) g(x) with deg m < k, built with integer arithmetic mod r.
std::set<std::vector<std::int64_t>> span_oracle(std::int64_t r, std::size_t n, const oracle::Vec& g) {
  const std::size_t k = n - (g.size() - 1);
  std::set<std::vector<std::int64_t>> out;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= r;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> w(n, 0);
    std::int64_t t = idx;
    for (std::size_t i = 0; i < k; ++i, t /= r)
      for (std::size_t j = 0; j < g.size(); ++j) w[i + j] = oracle::mod(w[i + j] + (t % r) * g[j], r);
    out.insert(w);
  }
  return out;
}

std::vector<std::int64_t> ints(const Codeword& c) {
  std::vector<std::int64_t> v;
  for (const auto& e : c) v.push_back(e[0]);
  return v;
}

}  // namespace

TEST(CyclicCode, Parameters) {
  const FieldSpec f2;
  const auto c = make_code(f2, 7, P(f2, {1, 1, 0, 1}));
  EXPECT_EQ(c.n(), 7u);
  EXPECT_EQ(c.k(), 4u);
  EXPECT_EQ(c.check(), P(f2, {1, 1, 1, 0, 1}));
  EXPECT_EQ(c.dual_gen(), P(f2, {1, 0, 1, 1, 1}));
  EXPECT_EQ(dual_code(c).k(), 3u);
}

TEST(CyclicCode, Errors) {
  const FieldSpec f2;
  EXPECT_EQ(code_of([&] { make_code(f2, 7, P(f2, {1, 1, 1})); }), ErrorCode::NotADivisor);
  EXPECT_EQ(code_of([&] { make_code(f2, 7, P(make_field(3), {1, 1})); }), ErrorCode::FieldMismatch);
  const auto c = make_code(f2, 7, P(f2, {1, 1, 0, 1}));
  EXPECT_EQ(code_of([&] { contains(c, Codeword(6, f2.zero())); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([&] { min_distance(make_code(f2, 3, Poly::xn_minus_1(f2, 3))); }), ErrorCode::ZeroCode);
  EXPECT_EQ(code_of([&] { intersect({c, make_code(f2, 3, P(f2, {1, 1}))}); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([&] { CodewordEnumerator e(make_code(f2, 63, P(f2, {1, 1})), 1024); }), ErrorCode::TooLarge);
}

TEST(CyclicCode, MembershipMatchesSpanOracle) {
  struct Case {
    FieldSpec f;
    std::size_t n;
    std::vector<std::int64_t> g;
  };
  const std::vector<Case> cases = {{make_field(2), 7, {1, 1, 0, 1}},
                                   {make_field(2), 9, {1, 1, 1}},
                                   {make_field(3), 8, {1, 0, 1}},
                                   {make_field(3), 4, {2, 1}},
                                   {make_field(2), 6, {1, 0, 1}}};
  for (const auto& c : cases) {
    const auto code = make_code(c.f, c.n, P(c.f, c.g));
    const auto span = span_oracle(c.f.r(), c.n, c.g);
    std::int64_t total = 1;
    for (std::size_t i = 0; i < c.n; ++i) total *= c.f.r();
    std::size_t members = 0;
    for (std::int64_t idx = 0; idx < total; ++idx) {
      Codeword w(c.n);
      std::int64_t t = idx;
      for (std::size_t i = 0; i < c.n; ++i, t /= c.f.r()) w[i] = c.f.from_integer(t % c.f.r());
      const bool in = contains(code, w);
      EXPECT_EQ(in, span.count(ints(w)) > 0);
      members += in;
    }
    EXPECT_EQ(members, span.size());
    const auto all = enumerate_codewords(code);
    EXPECT_EQ(all.size(), span.size());
    for (const auto& w : all) EXPECT_TRUE(span.count(ints(w)));
  }
}

TEST(CyclicCode, ShiftInvariance) {
  const FieldSpec f2;
  const auto code = make_code(f2, 15, P(f2, {1, 0, 0, 0, 1, 0, 1, 1, 1}));
  for (const auto& w : enumerate_codewords(code)) EXPECT_TRUE(contains(code, cyclic_shift(w)));
}

TEST(CyclicCode, MinimumDistanceKnownCodes) {
  const FieldSpec f2;
  EXPECT_EQ(min_distance(make_code(f2, 7, P(f2, {1, 1, 0, 1}))), 3u);
  // binary Golay code
  EXPECT_EQ(min_distance(make_code(f2, 23, P(f2, {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1}))), 7u);
  // double-error-correcting BCH code
  EXPECT_EQ(min_distance(make_code(f2, 15, P(f2, {1, 0, 0, 0, 1, 0, 1, 1, 1}))), 5u);
  EXPECT_EQ(min_distance(make_code(f2, 7, cyclotomic(7, f2))), 7u);
  // ternary Golay code
  const FieldSpec f3 = make_field(3);
  EXPECT_EQ(min_distance(make_code(f3, 11, P(f3, {2, 0, 1, 2, 1, 1}))), 5u);
}

TEST(CyclicCode, EnumeratorOrderAndSize) {
  const FieldSpec f3 = make_field(3);
  const auto code = make_code(f3, 4, P(f3, {1, 1}));
  CodewordEnumerator e(code);
  EXPECT_EQ(e.size(), 27u);
  Codeword w;
  std::set<std::vector<std::int64_t>> seen;
  while (e.next(w)) seen.insert(ints(w));
  EXPECT_EQ(seen.size(), 27u);
}

TEST(CyclicCode, WordPolyRoundTrip) {
  const FieldSpec f4 = make_field(2, 2);
  const Poly p(f4, {f4.from_index(2), f4.zero(), f4.from_index(3)});
  const auto w = poly_to_word(p, 5);
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(word_to_poly(w, f4), p);
  EXPECT_EQ(hamming_weight(w), 2u);
}

TEST(CyclicCode, BasisWords) {
  const FieldSpec f2;
  const auto code = make_code(f2, 7, P(f2, {1, 1, 0, 1}));
  const auto b = basis_words(code);
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(ints(b[2]), (std::vector<std::int64_t>{0, 0, 1, 1, 0, 1, 0}));
}

TEST(CyclicCode, IntersectIsLcm) {
  const FieldSpec f2;
  const auto a = make_code(f2, 7, P(f2, {1, 1})), b = make_code(f2, 7, P(f2, {1, 1, 0, 1}));
  const auto c = intersect({a, b});
  EXPECT_EQ(c.gen(), P(f2, {1, 0, 1, 1, 1}));
  for (const auto& w : enumerate_codewords(c)) {
    EXPECT_TRUE(contains(a, w));
    EXPECT_TRUE(contains(b, w));
  }
}

TEST(CyclicCode, MatrixRepresentations) {
  const FieldSpec f3 = make_field(3);
  Codeword c;
  for (int i = 0; i < 6; ++i) c.push_back(f3.from_integer(i));
  const auto rows = matrix_rep(c, Layout::RowBlocks, 3);
  EXPECT_EQ(rows.rows, 2u);
  EXPECT_EQ(rows.cols, 3u);
  EXPECT_EQ(rows.grid[1][0], f3.from_integer(3));
  const auto cols = matrix_rep(c, Layout::ColBlocks, 2);
  EXPECT_EQ(cols.rows, 2u);
  EXPECT_EQ(cols.cols, 3u);
  EXPECT_EQ(cols.grid[1][0], f3.from_integer(1));
  EXPECT_EQ(flatten(rows), c);
  EXPECT_EQ(flatten(cols), c);
  EXPECT_EQ(code_of([&] { matrix_rep(c, Layout::RowBlocks, 4); }), ErrorCode::NotADivisorOfLength);
}
