#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycperm/galois.hpp"

namespace cycperm {

/// Dense polynomial over a FieldSpec, ascending coefficients, never with a
/// trailing zero. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldSpec f) : field_(std::move(f)) {}
  Poly(FieldSpec f, std::vector<FFElement> coeffs);

  /// Coefficients given as integers, embedded in the prime subfield.
  static Poly from_ints(const FieldSpec& f, const std::vector<std::int64_t>& coeffs);
  static Poly monomial(const FieldSpec& f, std::size_t degree);
  static Poly constant(const FieldSpec& f, const FFElement& c);
  /// x^n - 1
  static Poly xn_minus_1(const FieldSpec& f, std::size_t n);

  const FieldSpec& field() const { return field_; }
  const std::vector<FFElement>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  /// Coefficient of x^i; zero past the degree.
  FFElement coeff(std::size_t i) const;
  const FFElement& leading() const { return coeffs_.back(); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldSpec field_;
  std::vector<FFElement> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_scale(const Poly& a, const FFElement& c);
Poly poly_pow(const Poly& a, std::uint64_t e);
Poly poly_monic(const Poly& a);
FFElement poly_eval(const Poly& a, const FFElement& x);
/// a(b(x))
Poly poly_compose(const Poly& a, const Poly& b);

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& a);
/// Monic gcd.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm, computed as a*b / gcd(a, b).
Poly poly_lcm(const Poly& a, const Poly& b);

/// Integer cyclotomic polynomial Phi_n, ascending coefficients. Memoized.
const std::vector<std::int64_t>& integer_cyclotomic(std::uint64_t n);
/// Phi_n reduced into f; requires gcd(n, char f) = 1.
Poly cyclotomic(std::uint64_t n, const FieldSpec& f);

struct PolyFactor {
  Poly poly;
  std::uint64_t multiplicity = 1;
};

/// q-cyclotomic cosets modulo n, each starting at its least element,
/// ordered by that element.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n, std::uint64_t q);

/// Irreducible factorization of x^n - 1 over f, sorted by degree, then by
/// coefficients from the top degree down.
std::vector<PolyFactor> factor_xn_minus_1(std::uint64_t n, const FieldSpec& f);

/// h(x) = (x^n - 1) / g(x).
Poly check_polynomial(const Poly& g, std::uint64_t n);
/// Monic x^k h(1/x) / h(0), the generator of the dual code.
Poly dual_generator(const Poly& g, std::uint64_t n);
/// g(x^t)
Poly substitute_power(const Poly& g, std::uint64_t t);

/// Canonical text form: comma-separated ascending coefficients; for alpha > 1
/// each coefficient is its residues joined by ':'. Zero is the empty string.
std::string format_poly(const Poly& p);
Poly parse_poly(std::string_view text, const FieldSpec& f);

/// Human form such as "x^3+x+1"; extension-field coefficients print as
/// "[c0:c1]".
std::string pretty_poly(const Poly& p);

/// Parses closed-form expressions: integers, x, Q<n> (cyclotomic),
/// + - * ^, parentheses, and Q<n>(inner) for composition. Implicit
/// multiplication between adjacent factors is allowed, "x^{21}" braces too.
Poly parse_poly_expr(std::string_view text, const FieldSpec& f);

/// Accepts either the canonical comma form or a closed-form expression.
Poly parse_poly_any(std::string_view text, const FieldSpec& f);

}  // namespace cycperm
