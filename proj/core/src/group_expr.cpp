#include "cycperm/group_expr.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "cycperm/autgroup.hpp"
#include "cycperm/error.hpp"

namespace cycperm {

GroupExpr GroupExpr::sym(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::BadDegree, "S(0) has no points");
  GroupExpr e;
  e.kind_ = Kind::Sym;
  e.n_ = n;
  return e;
}

GroupExpr GroupExpr::cyclic(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::BadDegree, "C(0) has no points");
  GroupExpr e;
  e.kind_ = Kind::Cyclic;
  e.n_ = n;
  return e;
}

GroupExpr GroupExpr::agl1(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::BadDegree, "AGL1 needs a prime degree, got " + std::to_string(p));
  GroupExpr e;
  e.kind_ = Kind::AGL1;
  e.n_ = p;
  return e;
}

GroupExpr GroupExpr::named(std::string tag) {
  GroupExpr e;
  e.kind_ = Kind::Named;
  if (tag == "PSL2_7") e.n_ = 7;
  else if (tag == "C31xC5") e.n_ = 31;
  else throw Error(ErrorCode::UnknownTag, "unknown group tag '" + tag + "'");
  e.tag_ = std::move(tag);
  return e;
}

GroupExpr GroupExpr::wreath(GroupExpr a, GroupExpr h, Layout layout) {
  GroupExpr e;
  e.kind_ = Kind::Wreath;
  e.layout_ = layout;
  e.n_ = a.degree() * h.degree();
  e.a_ = std::make_shared<const GroupExpr>(std::move(a));
  e.h_ = std::make_shared<const GroupExpr>(std::move(h));
  return e;
}

GroupExpr GroupExpr::crt(std::uint64_t p, std::uint64_t q) {
  GroupExpr e;
  e.kind_ = Kind::Crt;
  e.n_ = p;
  e.m_ = q;
  return e;
}

GroupExpr GroupExpr::per_of(std::uint64_t n, std::string gen) {
  if (n == 0) throw Error(ErrorCode::BadDegree, "per() needs a positive length");
  GroupExpr e;
  e.kind_ = Kind::PerOf;
  e.n_ = n;
  e.tag_ = std::move(gen);
  return e;
}

std::uint64_t GroupExpr::degree() const {
  switch (kind_) {
    case Kind::Crt: return n_ * m_;
    default: return n_;
  }
}

bool operator==(const GroupExpr& x, const GroupExpr& y) {
  if (x.kind_ != y.kind_ || x.n_ != y.n_ || x.m_ != y.m_ || x.tag_ != y.tag_) return false;
  if (x.kind_ != GroupExpr::Kind::Wreath) return true;
  return x.layout_ == y.layout_ && *x.a_ == *y.a_ && *x.h_ == *y.h_;
}

std::string format_group_expr(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind()) {
    case K::Sym: return "S(" + std::to_string(e.n()) + ")";
    case K::Cyclic: return "C(" + std::to_string(e.n()) + ")";
    case K::AGL1: return "AGL1(" + std::to_string(e.n()) + ")";
    case K::Named: return e.tag();
    case K::Wreath:
      return "wr(" + format_group_expr(e.a()) + "," + format_group_expr(e.h()) + "," +
             (e.layout() == Layout::RowBlocks ? "rows" : "cols") + ")";
    case K::Crt: return "x(" + std::to_string(e.n()) + "," + std::to_string(e.m()) + ")";
    case K::PerOf: return "per(" + std::to_string(e.n()) + ",[" + e.gen() + "])";
  }
  return {};
}

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view s) : s_(s) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    ws();
    if (i_ != s_.size()) syntax("trailing input");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void syntax(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError, why + " in group expression '" + std::string(s_) + "'", i_ + 1);
  }
  [[noreturn]] void arity(const std::string& what) const {
    throw Error(ErrorCode::ArityError, "wrong number of arguments to " + what, i_ + 1);
  }
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    ws();
    if (i_ >= s_.size() || s_[i_] != c) syntax(std::string("expected '") + c + "'");
    ++i_;
  }
  // Between arguments: ',' when more follow, ')' after the last.
  void separator(bool last, const std::string& what) {
    ws();
    if (i_ < s_.size()) {
      if (s_[i_] == (last ? ')' : ',')) {
        ++i_;
        return;
      }
      if (s_[i_] == (last ? ',' : ')')) arity(what);
    }
    syntax(last ? "expected ')'" : "expected ','");
  }
  std::string ident() {
    ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }
  std::uint64_t integer() {
    ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) syntax("expected integer");
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > (std::uint64_t{1} << 32)) syntax("integer too large");
      ++i_;
    }
    return v;
  }

  GroupExpr expr() {
    ws();
    const std::size_t start = i_;
    const std::string id = ident();
    if (id.empty()) syntax("expected group expression");
    if (id == "PSL2_7" || id == "C31xC5") return GroupExpr::named(id);
    if (id == "S" || id == "C" || id == "AGL1") {
      expect('(');
      const std::size_t at = i_;
      const auto n = integer();
      separator(true, id);
      try {
        if (id == "S") return GroupExpr::sym(n);
        if (id == "C") return GroupExpr::cyclic(n);
        return GroupExpr::agl1(n);
      } catch (const Error& err) {
        throw Error(err.code(), "bad degree " + std::to_string(n) + " for " + id, at + 1);
      }
    }
    if (id == "x") {
      expect('(');
      const auto p = integer();
      separator(false, "x");
      const auto q = integer();
      separator(true, "x");
      return GroupExpr::crt(p, q);
    }
    if (id == "wr") {
      expect('(');
      GroupExpr a = expr();
      separator(false, "wr");
      GroupExpr h = expr();
      separator(false, "wr");
      const std::string lay = ident();
      Layout layout;
      if (lay == "rows") layout = Layout::RowBlocks;
      else if (lay == "cols") layout = Layout::ColBlocks;
      else syntax("expected 'rows' or 'cols'");
      separator(true, "wr");
      return GroupExpr::wreath(std::move(a), std::move(h), layout);
    }
    if (id == "per") {
      expect('(');
      const auto n = integer();
      separator(false, "per");
      expect('[');
      std::string gen;
      ws();
      while (i_ < s_.size() && s_[i_] != ']') {
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == ':') gen += c;
        else if (!std::isspace(static_cast<unsigned char>(c))) syntax("bad coefficient list");
        ++i_;
      }
      expect(']');
      separator(true, "per");
      return GroupExpr::per_of(n, gen);
    }
    i_ = start;
    syntax("unknown constructor '" + id + "'");
  }
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return GroupParser(text).parse(); }

BigInt symbolic_order(const GroupExpr& e, const FieldSpec& field) {
  using K = GroupExpr::Kind;
  switch (e.kind()) {
    case K::Sym: return factorial(e.n());
    case K::Cyclic: return BigInt(e.n());
    case K::AGL1: return BigInt(e.n()) * (e.n() - 1);
    case K::Named: return e.tag() == "PSL2_7" ? BigInt(168) : BigInt(155);
    case K::Wreath: {
      const BigInt a = symbolic_order(e.a(), field);
      return boost::multiprecision::pow(a, static_cast<unsigned>(e.h().degree())) * symbolic_order(e.h(), field);
    }
    case K::Crt: return factorial(e.n()) * factorial(e.m());
    case K::PerOf: return per_leaf(field, e.n(), parse_poly(e.gen(), field)).order;
  }
  return 0;
}

std::vector<Permutation> wreath_generators(const std::vector<Permutation>& a_gens, std::size_t a_degree,
                                           const std::vector<Permutation>& h_gens, std::size_t h_degree,
                                           Layout layout) {
  (void)layout;  // both layouts share one embedding, see header
  if (a_gens.empty() || h_gens.empty()) throw Error(ErrorCode::EmptyGenerators, "wreath product needs generators");
  for (const auto& g : a_gens)
    if (g.degree() != a_degree) throw Error(ErrorCode::DegreeMismatch, "base generator degree mismatch");
  for (const auto& g : h_gens)
    if (g.degree() != h_degree) throw Error(ErrorCode::DegreeMismatch, "top generator degree mismatch");
  const std::size_t n = a_degree * h_degree;
  std::vector<Permutation> out;
  out.reserve(h_degree * a_gens.size() + h_gens.size());
  for (std::size_t h = 0; h < h_degree; ++h)
    for (const auto& alpha : a_gens) {
      std::vector<std::uint32_t> im(n);
      std::iota(im.begin(), im.end(), 0u);
      for (std::uint32_t a = 0; a < a_degree; ++a) im[a * h_degree + h] = static_cast<std::uint32_t>(alpha(a) * h_degree + h);
      out.emplace_back(std::move(im));
    }
  for (const auto& beta : h_gens) {
    std::vector<std::uint32_t> im(n);
    for (std::size_t a = 0; a < a_degree; ++a)
      for (std::uint32_t h = 0; h < h_degree; ++h)
        im[a * h_degree + h] = static_cast<std::uint32_t>(a * h_degree + beta(h));
    out.emplace_back(std::move(im));
  }
  return out;
}

std::vector<Permutation> crt_product_generators(std::uint64_t p, std::uint64_t q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw Error(ErrorCode::NotCoprime, "x(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime factors");
  const std::uint64_t n = p * q;
  std::vector<std::uint32_t> at(n);  // (k mod p) * q + (k mod q) -> k
  for (std::uint64_t k = 0; k < n; ++k) at[(k % p) * q + k % q] = static_cast<std::uint32_t>(k);
  auto lift = [&](const Permutation& tau, bool on_p) {
    std::vector<std::uint32_t> im(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      std::uint64_t a = k % p, b = k % q;
      if (on_p) a = tau(static_cast<std::uint32_t>(a));
      else b = tau(static_cast<std::uint32_t>(b));
      im[k] = at[a * q + b];
    }
    return Permutation(std::move(im));
  };
  std::vector<Permutation> out;
  for (const auto& t : named_group_generators("Sym", p)) out.push_back(lift(t, true));
  for (const auto& t : named_group_generators("Sym", q)) out.push_back(lift(t, false));
  return out;
}

namespace {

Permutation cycle_all(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(std::move(im));
}

Permutation affine(std::uint64_t p, std::uint64_t mul, std::uint64_t add) {
  std::vector<std::uint32_t> im(p);
  for (std::uint64_t k = 0; k < p; ++k) im[k] = static_cast<std::uint32_t>((mul * k + add) % p);
  return Permutation(std::move(im));
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  for (std::uint64_t g = 2; g < p; ++g) {
    std::uint64_t x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

}  // namespace

std::vector<Permutation> named_group_generators(std::string_view tag, std::size_t degree) {
  if (degree == 0) throw Error(ErrorCode::BadDegree, "degree must be positive");
  if (tag == "Sym") {
    if (degree == 1) return {Permutation::identity(1)};
    if (degree == 2) return {cycle_all(2)};
    return {Permutation::from_cycles(degree, {{0, 1}}), cycle_all(degree)};
  }
  if (tag == "Cyclic") {
    if (degree == 1) return {Permutation::identity(1)};
    return {cycle_all(degree)};
  }
  if (tag == "AGL1") {
    if (!is_prime(degree)) throw Error(ErrorCode::BadDegree, "AGL1 needs a prime degree");
    if (degree == 2) return {affine(2, 1, 1)};
    return {affine(degree, 1, 1), affine(degree, smallest_primitive_root(degree), 0)};
  }
  if (tag == "PSL2_7") {
    if (degree != 7) throw Error(ErrorCode::BadDegree, "PSL2_7 acts on 7 points");
    const FieldSpec f2 = make_field(2, 1);
    const auto& leaf = per_leaf(f2, 7, Poly::from_ints(f2, {1, 1, 0, 1}));
    if (leaf.order != 168)
      throw Error(ErrorCode::InvalidArgument, "bootstrapped PSL2_7 has order " + to_decimal(leaf.order));
    return leaf.gens;
  }
  if (tag == "C31xC5") {
    if (degree != 31) throw Error(ErrorCode::BadDegree, "C31xC5 acts on 31 points");
    return {affine(31, 1, 1), affine(31, 2, 0)};
  }
  throw Error(ErrorCode::UnknownTag, "unknown group tag '" + std::string(tag) + "'");
}

std::vector<Permutation> materialize(const GroupExpr& e, const FieldSpec& field) {
  using K = GroupExpr::Kind;
  switch (e.kind()) {
    case K::Sym: return named_group_generators("Sym", e.n());
    case K::Cyclic: return named_group_generators("Cyclic", e.n());
    case K::AGL1: return named_group_generators("AGL1", e.n());
    case K::Named: return named_group_generators(e.tag(), e.n());
    case K::Wreath:
      return wreath_generators(materialize(e.a(), field), e.a().degree(), materialize(e.h(), field), e.h().degree(),
                               e.layout());
    case K::Crt: return crt_product_generators(e.n(), e.m());
    case K::PerOf: {
      const auto& leaf = per_leaf(field, e.n(), parse_poly(e.gen(), field));
      if (leaf.gens.empty()) return {Permutation::identity(e.n())};
      return leaf.gens;
    }
  }
  return {};
}

std::vector<Permutation> small_generating_set(const std::vector<Permutation>& gens) {
  if (gens.empty()) return {};
  PermGroup acc(gens.front().degree());
  std::vector<Permutation> out;
  for (const auto& g : gens)
    if (acc.add_generator(g)) out.push_back(g);
  return out;
}

const PerLeaf& per_leaf(const FieldSpec& field, std::uint64_t n, const Poly& gen) {
  struct Slot {
    std::once_flag once;
    PerLeaf leaf;
  };
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<Slot>> cache;
  std::string mod;
  for (auto c : field.modulus()) mod += std::to_string(c) + ",";
  const std::string key = field.descriptor() + "|" + mod + "|" + std::to_string(n) + "|" + format_poly(gen);
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(mu);
    auto& s = cache[key];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] {
    const CyclicCodeSpec code = make_code(field, n, gen);
    PermGroup g = n <= kDefaultExhaustiveCutoff ? exhaustive_per_group(code) : backtrack_per_group(code);
    slot->leaf.gens = small_generating_set(g.generators());
    slot->leaf.order = g.order();
  });
  return slot->leaf;
}

}  // namespace cycperm
