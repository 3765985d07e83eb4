#include "cycperm/galois.hpp"

#include <charconv>

#include "cycperm/error.hpp"
#include "zr_poly.hpp"

namespace cycperm {

bool FFElement::is_zero() const {
  for (Residue c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_prime(std::span<const Residue> f, std::uint32_t r) {
  zr::Poly fp(f.begin(), f.end());
  zr::trim(fp);
  const int deg = zr::degree(fp);
  if (deg < 1 || fp.back() != 1) return false;
  if (deg == 1) return true;
  const zr::Poly y = {0, 1};
  zr::Poly t = y;
  for (int i = 1; i <= deg / 2; ++i) {
    t = zr::powmod(t, r, fp, r);
    zr::Poly diff = zr::sub(t, y, r);
    if (zr::degree(zr::gcd(diff, fp, r)) > 0) return false;
  }
  return true;
}

FieldSpec make_field(std::uint32_t r, std::uint32_t alpha,
                     std::optional<std::vector<Residue>> modulus) {
  if (!is_prime(r)) throw Error(ErrorCode::NotPrime, std::to_string(r) + " is not prime");
  if (alpha == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");

  auto data = std::make_shared<FieldSpec::Data>();
  data->r = r;
  data->alpha = alpha;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < alpha; ++i) {
    if (q > (std::uint64_t{1} << 62) / r) throw Error(ErrorCode::TooLarge, "field order overflows 64 bits");
    q *= r;
  }
  data->q = q;

  if (modulus) {
    auto& m = *modulus;
    if (alpha == 1 && m.empty()) {
      // prime field: no modulus needed
    } else {
      if (m.size() != alpha + 1)
        throw Error(ErrorCode::DegreeMismatch, "modulus degree " + std::to_string(m.size()) +
                                                   " - 1 does not match alpha " + std::to_string(alpha));
      for (Residue c : m)
        if (c >= r) throw Error(ErrorCode::ReducibleModulus, "modulus coefficient out of range");
      if (m.back() != 1) throw Error(ErrorCode::ReducibleModulus, "modulus is not monic");
      if (!is_irreducible_mod_prime(m, r))
        throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over Z_" + std::to_string(r));
      if (alpha > 1) data->modulus = m;
    }
  } else if (alpha > 1) {
    // Scan monic candidates; the index's base-r digits are c_0..c_{alpha-1}.
    std::vector<Residue> cand(alpha + 1, 0);
    cand[alpha] = 1;
    bool found = false;
    for (std::uint64_t idx = 0; idx < q && !found; ++idx) {
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < alpha; ++i) {
        cand[i] = static_cast<Residue>(v % r);
        v /= r;
      }
      if (cand[0] == 0) continue;
      if (is_irreducible_mod_prime(cand, r)) found = true;
    }
    data->modulus = cand;
  }
  return FieldSpec(std::move(data));
}

FieldSpec parse_field(std::string_view descriptor, std::optional<std::string_view> modulus) {
  auto parse_uint = [&](std::string_view s) {
    std::uint32_t v = 0;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorCode::SyntaxError, "bad field descriptor '" + std::string(descriptor) + "'");
    return v;
  };
  std::uint32_t r = 0, alpha = 1;
  auto caret = descriptor.find('^');
  if (caret == std::string_view::npos) {
    r = parse_uint(descriptor);
  } else {
    r = parse_uint(descriptor.substr(0, caret));
    alpha = parse_uint(descriptor.substr(caret + 1));
  }
  std::optional<std::vector<Residue>> mod;
  if (modulus && !modulus->empty()) {
    std::vector<Residue> m;
    std::string_view rest = *modulus;
    while (true) {
      auto comma = rest.find(',');
      m.push_back(parse_uint(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    mod = std::move(m);
  }
  return make_field(r, alpha, std::move(mod));
}

FieldSpec::FieldSpec() {
  static const FieldSpec f2 = make_field(2, 1);
  data_ = f2.data_;
}

FFElement FieldSpec::zero() const {
  return FFElement(FFElement::Storage(alpha(), 0));
}

FFElement FieldSpec::one() const {
  FFElement::Storage s(alpha(), 0);
  s[0] = 1;
  return FFElement(std::move(s));
}

FFElement FieldSpec::element(std::span<const Residue> coeffs) const {
  if (coeffs.size() != alpha())
    throw Error(ErrorCode::FieldMismatch, "element has " + std::to_string(coeffs.size()) +
                                              " coefficients, field needs " + std::to_string(alpha()));
  for (Residue c : coeffs)
    if (c >= r()) throw Error(ErrorCode::FieldMismatch, "coefficient out of range");
  return FFElement(FFElement::Storage(coeffs.begin(), coeffs.end()));
}

FFElement FieldSpec::from_integer(std::int64_t value) const {
  std::int64_t m = value % static_cast<std::int64_t>(r());
  if (m < 0) m += r();
  FFElement::Storage s(alpha(), 0);
  s[0] = static_cast<Residue>(m);
  return FFElement(std::move(s));
}

FFElement FieldSpec::from_index(std::uint64_t index) const {
  if (index >= order()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  FFElement::Storage s(alpha(), 0);
  for (std::uint32_t i = 0; i < alpha(); ++i) {
    s[i] = static_cast<Residue>(index % r());
    index /= r();
  }
  return FFElement(std::move(s));
}

std::uint64_t FieldSpec::index_of(const FFElement& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * r() + a[i];
  return idx;
}

bool FieldSpec::is_valid(const FFElement& a) const {
  if (a.size() != alpha()) return false;
  for (Residue c : a.coeffs())
    if (c >= r()) return false;
  return true;
}

std::string FieldSpec::descriptor() const {
  if (alpha() == 1) return std::to_string(r());
  return std::to_string(r()) + "^" + std::to_string(alpha());
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.r() == b.r() && a.alpha() == b.alpha() && a.data_->modulus == b.data_->modulus;
}

namespace {

void check(const FFElement& a, const FieldSpec& f) {
  if (!f.is_valid(a)) throw Error(ErrorCode::FieldMismatch, "element does not belong to F_" + f.descriptor());
}

}  // namespace

FFElement ff_add(const FFElement& a, const FFElement& b, const FieldSpec& f) {
  check(a, f);
  check(b, f);
  FFElement::Storage s(f.alpha());
  for (std::uint32_t i = 0; i < f.alpha(); ++i) s[i] = (a[i] + b[i]) % f.r();
  return FFElement(std::move(s));
}

FFElement ff_sub(const FFElement& a, const FFElement& b, const FieldSpec& f) {
  check(a, f);
  check(b, f);
  FFElement::Storage s(f.alpha());
  for (std::uint32_t i = 0; i < f.alpha(); ++i) s[i] = (a[i] + f.r() - b[i]) % f.r();
  return FFElement(std::move(s));
}

FFElement ff_neg(const FFElement& a, const FieldSpec& f) {
  check(a, f);
  FFElement::Storage s(f.alpha());
  for (std::uint32_t i = 0; i < f.alpha(); ++i) s[i] = (f.r() - a[i]) % f.r();
  return FFElement(std::move(s));
}

FFElement ff_mul(const FFElement& a, const FFElement& b, const FieldSpec& f) {
  check(a, f);
  check(b, f);
  const std::uint64_t r = f.r();
  const std::uint32_t n = f.alpha();
  if (n == 1) return FFElement{static_cast<Residue>(std::uint64_t{a[0]} * b[0] % r)};
  boost::container::small_vector<std::uint64_t, 8> prod(2 * n - 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % r;
  }
  auto m = f.modulus();
  for (std::size_t d = prod.size(); d-- > n;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    // y^d = y^{d-n} * y^n and y^n = -(m_0 + ... + m_{n-1} y^{n-1})
    for (std::uint32_t i = 0; i < n; ++i)
      prod[d - n + i] = (prod[d - n + i] + (r - m[i]) * c) % r;
    prod[d] = 0;
  }
  FFElement::Storage s(n);
  for (std::uint32_t i = 0; i < n; ++i) s[i] = static_cast<Residue>(prod[i]);
  return FFElement(std::move(s));
}

FFElement ff_inv(const FFElement& a, const FieldSpec& f) {
  check(a, f);
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t r = f.r();
  if (f.alpha() == 1) return FFElement{zr::inv_mod(a[0], r)};
  zr::Poly ap(a.coeffs().begin(), a.coeffs().end());
  zr::Poly m(f.modulus().begin(), f.modulus().end());
  zr::Poly inv = zr::inverse_mod(ap, m, r);
  FFElement::Storage s(f.alpha(), 0);
  for (std::size_t i = 0; i < inv.size(); ++i) s[i] = inv[i];
  return FFElement(std::move(s));
}

FFElement ff_pow(const FFElement& a, std::uint64_t exponent, const FieldSpec& f) {
  FFElement result = f.one();
  FFElement base = a;
  while (exponent > 0) {
    if (exponent & 1) result = ff_mul(result, base, f);
    exponent >>= 1;
    if (exponent) base = ff_mul(base, base, f);
  }
  return result;
}

FFElement ff_pow(const FFElement& a, const BigInt& exponent, const FieldSpec& f) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  FFElement result = f.one();
  FFElement base = a;
  const std::size_t bits = exponent == 0 ? 0 : boost::multiprecision::msb(exponent) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(exponent, i)) result = ff_mul(result, base, f);
    if (i + 1 < bits) base = ff_mul(base, base, f);
  }
  return result;
}

FieldTables::FieldTables(const FieldSpec& f) {
  if (f.order() > kMaxOrder)
    throw Error(ErrorCode::TooLarge, "field tables limited to q <= 256, got q = " + std::to_string(f.order()));
  q_ = static_cast<std::uint32_t>(f.order());
  add_.resize(q_ * q_);
  sub_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  std::vector<FFElement> els;
  els.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) els.push_back(f.from_index(i));
  for (std::uint32_t i = 0; i < q_; ++i) {
    neg_[i] = static_cast<std::uint8_t>(f.index_of(ff_neg(els[i], f)));
    if (i != 0) inv_[i] = static_cast<std::uint8_t>(f.index_of(ff_inv(els[i], f)));
    for (std::uint32_t j = 0; j < q_; ++j) {
      add_[i * q_ + j] = static_cast<std::uint8_t>(f.index_of(ff_add(els[i], els[j], f)));
      sub_[i * q_ + j] = static_cast<std::uint8_t>(f.index_of(ff_sub(els[i], els[j], f)));
      mul_[i * q_ + j] = static_cast<std::uint8_t>(f.index_of(ff_mul(els[i], els[j], f)));
    }
  }
}

}  // namespace cycperm
