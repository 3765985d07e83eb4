#include <gtest/gtest.h>

#include <numeric>

#include "cycperm/error.hpp"
#include "cycperm/poly.hpp"
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
  return ErrorCode::InvalidArgument;  // sentinel: nothing thrown
}

// Phi_n over Z from prod_{d | n} (x^d - 1)^{mu(n/d)}.
oracle::Vec mobius_cyclotomic(std::int64_t n) {
  auto mu = [](std::int64_t m) {
    int s = 1;
    for (std::int64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        s = -s;
      }
    return m > 1 ? -s : s;
  };
  oracle::Vec num = {1}, den = {1};
  auto mul = [](const oracle::Vec& a, const oracle::Vec& b) {
    oracle::Vec p(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
  };
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    oracle::Vec xd(d + 1, 0);
    xd[0] = -1;
    xd[d] = 1;
    const int m = mu(n / d);
    if (m == 1) num = mul(num, xd);
    if (m == -1) den = mul(den, xd);
  }
  // exact division of monic integer polynomials
  oracle::Vec q(num.size() - den.size() + 1, 0);
  for (std::size_t i = num.size(); i-- >= den.size();) {
    const std::int64_t c = num[i] / den.back();
    q[i - den.size() + 1] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= c * den[j];
    if (i == den.size() - 1) break;
  }
  return q;
}

}  // namespace

TEST(Poly, ConstructionTrimsAndValidates) {
  const FieldSpec f2;
  EXPECT_EQ(P(f2, {1, 1, 0, 0}).degree(), 1);
  EXPECT_TRUE(P(f2, {2, 4}).is_zero());
  EXPECT_EQ(Poly(f2).degree(), -1);
  EXPECT_EQ(Poly::monomial(f2, 5).degree(), 5);
  EXPECT_EQ(Poly::xn_minus_1(f2, 3), P(f2, {1, 0, 0, 1}));
  EXPECT_EQ(code_of([&] { Poly(f2, {FFElement{3}}); }), ErrorCode::FieldMismatch);
}

TEST(Poly, Arithmetic) {
  const FieldSpec f3 = make_field(3);
  const Poly a = P(f3, {1, 2, 1}), b = P(f3, {2, 1});
  EXPECT_EQ(a + b, P(f3, {0, 0, 1}));
  EXPECT_EQ(a - a, Poly(f3));
  EXPECT_EQ(a * b, P(f3, {2, 5, 4, 1}));
  EXPECT_EQ(poly_pow(b, 3), b * b * b);
  EXPECT_EQ(poly_eval(a, f3.from_integer(1)), f3.from_integer(1));
  EXPECT_EQ(poly_compose(P(f3, {0, 0, 1}), b), b * b);
  EXPECT_EQ(poly_monic(P(f3, {1, 2})), P(f3, {2, 1}));
  EXPECT_EQ(poly_scale(a, f3.from_integer(2)), a + a);
}

TEST(Poly, DivisionIdentity) {
  const FieldSpec f = make_field(2, 2);
  oracle::Vec seeds = {3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9};
  for (std::size_t da = 0; da < 10; ++da)
    for (std::size_t db = 0; db < 6; ++db) {
      std::vector<FFElement> ca, cb;
      for (std::size_t i = 0; i <= da; ++i) ca.push_back(f.from_index((seeds[i % seeds.size()] + da * i) % 4));
      for (std::size_t i = 0; i <= db; ++i) cb.push_back(f.from_index((seeds[(i + 3) % seeds.size()] + db) % 4));
      cb.back() = f.one();
      const Poly a(f, ca), b(f, cb);
      const auto [q, r] = poly_divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  EXPECT_EQ(code_of([&] { poly_divmod(P(make_field(2), {1}), Poly(make_field(2))); }), ErrorCode::DivisionByZero);
}

TEST(Poly, GcdLcm) {
  const FieldSpec f2;
  const Poly a = P(f2, {1, 1}) * P(f2, {1, 1, 0, 1}), b = P(f2, {1, 1}) * P(f2, {1, 0, 1, 1});
  EXPECT_EQ(poly_gcd(a, b), P(f2, {1, 1}));
  EXPECT_EQ(poly_lcm(a, b), P(f2, {1, 1}) * P(f2, {1, 1, 0, 1}) * P(f2, {1, 0, 1, 1}));
  EXPECT_TRUE(poly_divides(P(f2, {1, 1, 0, 1}), Poly::xn_minus_1(f2, 7)));
  EXPECT_FALSE(poly_divides(P(f2, {1, 1, 0, 1}), Poly::xn_minus_1(f2, 8)));
}

TEST(Poly, IntegerCyclotomicMatchesMobiusOracle) {
  for (std::int64_t n = 1; n <= 120; ++n)
    EXPECT_EQ(integer_cyclotomic(n), mobius_cyclotomic(n)) << n;
  EXPECT_EQ(integer_cyclotomic(105)[7], -2);  // first coefficient outside {-1,0,1}
}

TEST(Poly, CyclotomicOverFields) {
  const FieldSpec f2;
  EXPECT_EQ(cyclotomic(15, f2), P(f2, {1, -1, 0, 1, -1, 1, 0, -1, 1}));
  EXPECT_EQ(cyclotomic(7, f2).degree(), 6);
  EXPECT_EQ(code_of([] { cyclotomic(6, make_field(3)); }), ErrorCode::CharacteristicDividesN);
  EXPECT_EQ(code_of([] { cyclotomic(4, make_field(2)); }), ErrorCode::CharacteristicDividesN);
}

TEST(Poly, PqIdentity) {
  for (const auto& f : {make_field(2), make_field(3)})
    for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{3, 5}, {3, 7}, {5, 7}}) {
      if (p % f.r() == 0) continue;
      EXPECT_EQ(P(f, {-1, 1}) * cyclotomic(p, f) * cyclotomic(q, f) * cyclotomic(p * q, f), Poly::xn_minus_1(f, p * q));
    }
}

TEST(Poly, CyclotomicCosets) {
  const auto c = cyclotomic_cosets(7, 2);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[1], (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(c[2], (std::vector<std::uint64_t>{3, 6, 5}));
}

TEST(Poly, FactorXnMinus1Small) {
  const FieldSpec f2;
  const auto f7 = factor_xn_minus_1(7, f2);
  ASSERT_EQ(f7.size(), 3u);
  EXPECT_EQ(f7[0].poly, P(f2, {1, 1}));
  // top-down coefficient vectors: x^3+x+1 is (1,0,1,1), x^3+x^2+1 is (1,1,0,1)
  EXPECT_EQ(f7[1].poly, P(f2, {1, 1, 0, 1}));
  EXPECT_EQ(f7[2].poly, P(f2, {1, 0, 1, 1}));
  const auto f6 = factor_xn_minus_1(6, f2);
  ASSERT_EQ(f6.size(), 2u);
  EXPECT_EQ(f6[0].multiplicity, 2u);
  EXPECT_EQ(f6[1].poly, P(f2, {1, 1, 1}));
}

TEST(Poly, FactorProductAllLengthsUpTo100) {
  for (const auto& f : {make_field(2), make_field(3), make_field(2, 2)})
    for (std::uint64_t n = 1; n <= 100; ++n) {
      Poly prod = Poly::constant(f, f.one());
      std::uint64_t m = n;
      while (m % f.r() == 0) m /= f.r();
      std::uint64_t distinct = 0;
      for (const auto& pf : factor_xn_minus_1(n, f)) {
        EXPECT_TRUE(pf.poly.is_monic());
        EXPECT_EQ(pf.multiplicity, n / m);
        prod = prod * poly_pow(pf.poly, pf.multiplicity);
        ++distinct;
      }
      EXPECT_EQ(prod, Poly::xn_minus_1(f, n)) << f.descriptor() << " n=" << n;
      EXPECT_EQ(distinct, cyclotomic_cosets(m, f.order()).size());
    }
}

TEST(Poly, FactorsAreIrreducibleByTrialDivision) {
  for (const auto& f : {make_field(2), make_field(3)})
    for (std::uint64_t n = 1; n <= 40; ++n)
      for (const auto& pf : factor_xn_minus_1(n, f)) {
        if (pf.poly.degree() > 12) continue;
        oracle::Vec v;
        for (const auto& c : pf.poly.coeffs()) v.push_back(c[0]);
        EXPECT_TRUE(oracle::irreducible(v, f.r())) << pretty_poly(pf.poly);
      }
}

TEST(Poly, CheckAndDual) {
  const FieldSpec f2;
  const Poly g = P(f2, {1, 1, 0, 1});
  EXPECT_EQ(check_polynomial(g, 7), P(f2, {1, 1, 1, 0, 1}));
  EXPECT_EQ(dual_generator(g, 7), P(f2, {1, 0, 1, 1, 1}));
  EXPECT_EQ(code_of([&] { check_polynomial(P(f2, {1, 1, 1}), 7); }), ErrorCode::NotADivisor);
  EXPECT_EQ(substitute_power(P(f2, {1, 1, 1}), 3), P(f2, {1, 0, 0, 1, 0, 0, 1}));
}

TEST(Poly, TextRoundTrip) {
  const FieldSpec f2, f9 = make_field(3, 2);
  EXPECT_EQ(format_poly(P(f2, {1, 1, 0, 1})), "1,1,0,1");
  EXPECT_EQ(parse_poly("1,1,0,1", f2), P(f2, {1, 1, 0, 1}));
  EXPECT_EQ(format_poly(Poly(f2)), "");
  const Poly e(f9, {f9.from_index(5), f9.zero(), f9.one()});
  EXPECT_EQ(format_poly(e), "2:1,0:0,1:0");
  EXPECT_EQ(parse_poly(format_poly(e), f9), e);
  EXPECT_EQ(pretty_poly(P(f2, {1, 1, 0, 1})), "x^3+x+1");
  EXPECT_EQ(code_of([&] { parse_poly("1,2", f2); }), ErrorCode::FieldMismatch);
}

TEST(Poly, Expressions) {
  const FieldSpec f2;
  EXPECT_EQ(parse_poly_expr("x^3+x+1", f2), P(f2, {1, 1, 0, 1}));
  EXPECT_EQ(parse_poly_expr("(x^21+x^7+1)^2", f2), poly_pow(parse_poly_expr("x^{21}+x^7+1", f2), 2));
  EXPECT_EQ(parse_poly_expr("Q3(x^3)", f2), P(f2, {1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(parse_poly_expr("(x-1)*Q3*Q5", f2), parse_poly_expr("(x+1)Q_3 Q{5}", f2));
  EXPECT_EQ(parse_poly_expr("Q15", f2), cyclotomic(15, f2));
  EXPECT_EQ(parse_poly_any("1,1,0,1", f2), parse_poly_any("x^3+x+1", f2));
  try {
    parse_poly_expr("x^3+*x", f2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    ASSERT_TRUE(e.offset().has_value());
    EXPECT_EQ(*e.offset(), 5u);
  }
}
