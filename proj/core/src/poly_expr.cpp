#include <cctype>

#include "cycperm/error.hpp"
#include "cycperm/poly.hpp"

namespace cycperm {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const FieldSpec& f) : s_(text), f_(f) {}

  Poly parse() {
    Poly p = expr();
    ws();
    if (i_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  std::string_view s_;
  const FieldSpec& f_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError, why + " in '" + std::string(s_) + "'", i_ + 1);
  }
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  std::uint64_t integer() {
    ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large");
      ++i_;
    }
    return v;
  }

  Poly expr() {
    Poly acc(f_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Poly t = term();
    acc = negate ? poly_neg(t) : t;
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  bool starts_factor() {
    ws();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || c == 'x' || c == 'Q' || std::isdigit(static_cast<unsigned char>(c));
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      if (eat('*')) acc = acc * power();
      else if (starts_factor()) acc = acc * power();
      else break;
    }
    return acc;
  }

  std::uint64_t exponent() {
    if (eat('{')) {
      auto e = integer();
      if (!eat('}')) fail("expected '}'");
      return e;
    }
    return integer();
  }

  Poly power() {
    Poly b = base();
    while (eat('^')) b = poly_pow(b, exponent());
    return b;
  }

  Poly base() {
    ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++i_;
      return Poly::monomial(f_, 1);
    }
    if (c == 'Q') {
      ++i_;
      eat('_');
      std::uint64_t n = eat('{') ? integer() : integer();
      if (i_ < s_.size() && s_[i_] == '}') ++i_;
      Poly q = cyclotomic(n, f_);
      // Q_n(inner): composition, only when the parenthesis follows directly.
      if (i_ < s_.size() && s_[i_] == '(') {
        ++i_;
        Poly inner = expr();
        if (!eat(')')) fail("expected ')'");
        q = poly_compose(q, inner);
      }
      return q;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = integer();
      return Poly::constant(f_, f_.from_integer(static_cast<std::int64_t>(v % f_.r())));
    }
    fail("unexpected character");
  }
};

}  // namespace

Poly parse_poly_expr(std::string_view text, const FieldSpec& f) { return ExprParser(text, f).parse(); }

Poly parse_poly_any(std::string_view text, const FieldSpec& f) {
  bool canonical = true;
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == ':' || c == ' ')) canonical = false;
  // A bare integer reads the same either way; commas or colons force the list form.
  return canonical ? parse_poly(text, f) : parse_poly_expr(text, f);
}

}  // namespace cycperm
