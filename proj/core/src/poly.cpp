#include "cycperm/poly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

#include "cycperm/error.hpp"

namespace cycperm {

namespace {

void trim(std::vector<FFElement>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::FieldMismatch, "polynomials over F_" + a.field().descriptor() + " and F_" +
                                              b.field().descriptor());
}

}  // namespace

Poly::Poly(FieldSpec f, std::vector<FFElement> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!field_.is_valid(c)) throw Error(ErrorCode::FieldMismatch, "coefficient not in F_" + field_.descriptor());
  trim(coeffs_);
}

Poly Poly::from_ints(const FieldSpec& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<FFElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(f.from_integer(v));
  return Poly(f, std::move(c));
}

Poly Poly::monomial(const FieldSpec& f, std::size_t degree) {
  std::vector<FFElement> c(degree + 1, f.zero());
  c[degree] = f.one();
  return Poly(f, std::move(c));
}

Poly Poly::constant(const FieldSpec& f, const FFElement& c) { return Poly(f, {c}); }

Poly Poly::xn_minus_1(const FieldSpec& f, std::size_t n) {
  std::vector<FFElement> c(n + 1, f.zero());
  c[n] = f.one();
  c[0] = ff_add(c[0], f.from_integer(-1), f);
  return Poly(f, std::move(c));
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

FFElement Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

Poly operator+(const Poly& a, const Poly& b) {
  same_field(a, b);
  const auto& f = a.field();
  std::vector<FFElement> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ff_add(a.coeff(i), b.coeff(i), f);
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  same_field(a, b);
  const auto& f = a.field();
  std::vector<FFElement> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ff_sub(a.coeff(i), b.coeff(i), f);
  return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  same_field(a, b);
  const auto& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  if (f.alpha() == 1) {
    const std::uint64_t r = f.r();
    std::vector<std::uint64_t> acc(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
      const std::uint64_t x = ac[i][0];
      if (x == 0) continue;
      for (std::size_t j = 0; j < bc.size(); ++j) acc[i + j] = (acc[i + j] + x * bc[j][0]) % r;
    }
    std::vector<FFElement> c;
    c.reserve(acc.size());
    for (auto v : acc) c.push_back(FFElement{static_cast<Residue>(v)});
    return Poly(f, std::move(c));
  }
  std::vector<FFElement> c(ac.size() + bc.size() - 1, f.zero());
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] = ff_add(c[i + j], ff_mul(ac[i], bc[j], f), f);
  }
  return Poly(f, std::move(c));
}

Poly poly_neg(const Poly& a) {
  std::vector<FFElement> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(ff_neg(x, a.field()));
  return Poly(a.field(), std::move(c));
}

Poly poly_scale(const Poly& a, const FFElement& s) {
  std::vector<FFElement> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(ff_mul(x, s, a.field()));
  return Poly(a.field(), std::move(c));
}

Poly poly_pow(const Poly& a, std::uint64_t e) {
  Poly result = Poly::constant(a.field(), a.field().one());
  Poly base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly poly_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, ff_inv(a.leading(), a.field()));
}

FFElement poly_eval(const Poly& a, const FFElement& x) {
  const auto& f = a.field();
  FFElement acc = f.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = ff_add(ff_mul(acc, x, f), a.coeffs()[i], f);
  return acc;
}

Poly poly_compose(const Poly& a, const Poly& b) {
  same_field(a, b);
  Poly acc(a.field());
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = acc * b + Poly::constant(a.field(), a.coeffs()[i]);
  return acc;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  same_field(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  const int db = b.degree();
  if (f.alpha() == 1) {
    const std::uint64_t r = f.r();
    std::vector<std::uint64_t> rem(a.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = a.coeffs()[i][0];
    std::vector<std::uint64_t> bc(db + 1);
    for (int i = 0; i <= db; ++i) bc[i] = b.coeffs()[i][0];
    const std::uint64_t li = ff_inv(b.leading(), f)[0];
    std::vector<FFElement> q(a.degree() - db + 1, f.zero());
    for (int d = a.degree(); d >= db; --d) {
      const std::uint64_t c = rem[d] * li % r;
      if (c == 0) continue;
      q[d - db] = FFElement{static_cast<Residue>(c)};
      const std::uint64_t nc = r - c;
      for (int i = 0; i <= db; ++i) rem[d - db + i] = (rem[d - db + i] + nc * bc[i]) % r;
    }
    std::vector<FFElement> rc;
    rc.reserve(db);
    for (int i = 0; i < db; ++i) rc.push_back(FFElement{static_cast<Residue>(rem[i])});
    return {Poly(f, std::move(q)), Poly(f, std::move(rc))};
  }
  std::vector<FFElement> rem = a.coeffs();
  const FFElement li = ff_inv(b.leading(), f);
  std::vector<FFElement> q(a.degree() - db + 1, f.zero());
  for (int d = a.degree(); d >= db; --d) {
    if (rem[d].is_zero()) continue;
    const FFElement c = ff_mul(rem[d], li, f);
    q[d - db] = c;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = ff_sub(rem[d - db + i], ff_mul(c, b.coeffs()[i], f), f);
  }
  rem.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

bool poly_divides(const Poly& d, const Poly& a) { return poly_mod(a, d).is_zero(); }

Poly poly_gcd(const Poly& a, const Poly& b) {
  same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::InvalidArgument, "gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return poly_monic(poly_divmod(a * b, poly_gcd(a, b)).first);
}

const std::vector<std::int64_t>& integer_cyclotomic(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::int64_t>> memo;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be >= 1");
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, dividing one factor at a time.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& den = integer_cyclotomic(d);  // monic
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const std::int64_t c = num[k];
      q[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(c, den[i], &prod) ||
            __builtin_sub_overflow(num[k - dd + i], prod, &num[k - dd + i]))
          throw Error(ErrorCode::TooLarge, "cyclotomic coefficients overflow 64 bits");
      }
    }
    for (std::size_t i = 0; i < dd; ++i)
      if (num[i] != 0) throw Error(ErrorCode::NotADivisor, "inexact cyclotomic division");
    num = std::move(q);
  }
  std::lock_guard lock(mu);
  return memo.emplace(n, std::move(num)).first->second;
}

Poly cyclotomic(std::uint64_t n, const FieldSpec& f) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be >= 1");
  if (n % f.r() == 0)
    throw Error(ErrorCode::CharacteristicDividesN,
                "characteristic " + std::to_string(f.r()) + " divides " + std::to_string(n));
  return Poly::from_ints(f, integer_cyclotomic(n));
}

Poly check_polynomial(const Poly& g, std::uint64_t n) {
  auto [h, rem] = poly_divmod(Poly::xn_minus_1(g.field(), n), g);
  if (!rem.is_zero()) throw Error(ErrorCode::NotADivisor, "g(x) does not divide x^" + std::to_string(n) + " - 1");
  return h;
}

Poly dual_generator(const Poly& g, std::uint64_t n) {
  if (!g.is_monic()) throw Error(ErrorCode::NotADivisor, "generator must be monic");
  Poly h = check_polynomial(g, n);
  const auto& f = g.field();
  std::vector<FFElement> rev(h.coeffs().rbegin(), h.coeffs().rend());
  // h(0) != 0 because h | x^n - 1.
  const FFElement s = ff_inv(h.coeffs().front(), f);
  return poly_scale(Poly(f, std::move(rev)), s);
}

Poly substitute_power(const Poly& g, std::uint64_t t) {
  if (t == 0) throw Error(ErrorCode::InvalidArgument, "substitution exponent must be >= 1");
  const auto& f = g.field();
  if (g.is_zero()) return g;
  std::vector<FFElement> c(static_cast<std::size_t>(g.degree()) * t + 1, f.zero());
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) c[i * t] = g.coeffs()[i];
  return Poly(f, std::move(c));
}

std::string format_poly(const Poly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    const auto& c = p.coeffs()[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ':';
      out += std::to_string(c[j]);
    }
  }
  return out;
}

Poly parse_poly(std::string_view text, const FieldSpec& f) {
  std::vector<FFElement> coeffs;
  auto bad = [&](std::size_t pos, const std::string& why) {
    return Error(ErrorCode::SyntaxError, why + " in polynomial '" + std::string(text) + "'", pos + 1);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) return Poly(f);
  while (true) {
    FFElement::Storage residues;
    while (true) {
      skip_ws();
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw bad(i, "expected integer");
      i = static_cast<std::size_t>(ptr - text.data());
      if (v >= f.r()) throw Error(ErrorCode::FieldMismatch, "residue " + std::to_string(v) + " out of range");
      residues.push_back(static_cast<Residue>(v));
      skip_ws();
      if (i < text.size() && text[i] == ':') {
        ++i;
        continue;
      }
      break;
    }
    if (residues.size() == 1 && f.alpha() > 1) residues.resize(f.alpha(), 0);
    if (residues.size() != f.alpha())
      throw Error(ErrorCode::FieldMismatch, "coefficient has " + std::to_string(residues.size()) +
                                                " residues, field needs " + std::to_string(f.alpha()));
    coeffs.emplace_back(std::move(residues));
    if (i == text.size()) break;
    if (text[i] != ',') throw bad(i, "expected ','");
    ++i;
  }
  return Poly(f, std::move(coeffs));
}

std::string pretty_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  const auto& f = p.field();
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const auto& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string cs;
    if (f.alpha() == 1) {
      cs = std::to_string(c[0]);
    } else {
      cs = "[";
      for (std::size_t j = 0; j < c.size(); ++j) cs += (j ? ":" : "") + std::to_string(c[j]);
      cs += "]";
    }
    const bool unit = c == f.one();
    if (i == 0) {
      out += cs;
    } else {
      if (!unit) out += cs;
      out += 'x';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

}  // namespace cycperm
