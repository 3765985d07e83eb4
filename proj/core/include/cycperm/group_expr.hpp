#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cycperm/bigint.hpp"
#include "cycperm/cyclic_code.hpp"
#include "cycperm/permutation.hpp"

namespace cycperm {

/// Symbolic permutation group. Leaves: S(n), C(n), AGL1(p), the named
/// groups PSL2_7 and C31xC5, and per(n,[g]) for the group of a cyclic code
/// over the context field. Inner nodes: wr(A,H,layout) and x(p,q).
class GroupExpr {
 public:
  enum class Kind { Sym, Cyclic, AGL1, Named, Wreath, Crt, PerOf };

  static GroupExpr sym(std::uint64_t n);
  static GroupExpr cyclic(std::uint64_t n);
  static GroupExpr agl1(std::uint64_t p);
  static GroupExpr named(std::string tag);
  static GroupExpr wreath(GroupExpr a, GroupExpr h, Layout layout);
  static GroupExpr crt(std::uint64_t p, std::uint64_t q);
  /// `gen` in the canonical comma/colon coefficient form.
  static GroupExpr per_of(std::uint64_t n, std::string gen);

  Kind kind() const { return kind_; }
  /// Sym/Cyclic/AGL1/PerOf degree, or p for Crt.
  std::uint64_t n() const { return n_; }
  /// q for Crt.
  std::uint64_t m() const { return m_; }
  const std::string& tag() const { return tag_; }
  const std::string& gen() const { return tag_; }
  Layout layout() const { return layout_; }
  const GroupExpr& a() const { return *a_; }
  const GroupExpr& h() const { return *h_; }

  std::uint64_t degree() const;

  friend bool operator==(const GroupExpr& x, const GroupExpr& y);

 private:
  Kind kind_ = Kind::Sym;
  std::uint64_t n_ = 1, m_ = 0;
  std::string tag_;
  Layout layout_ = Layout::RowBlocks;
  std::shared_ptr<const GroupExpr> a_, h_;
};

std::string format_group_expr(const GroupExpr& e);
GroupExpr parse_group_expr(std::string_view text);

/// |A wr H| = |A|^deg(H) |H|, |x(p,q)| = p! q!, and the named orders.
/// per(...) leaves are computed by searching their code over `field`.
BigInt symbolic_order(const GroupExpr& e, const FieldSpec& field = FieldSpec());

/// Explicit generators of degree e.degree().
std::vector<Permutation> materialize(const GroupExpr& e, const FieldSpec& field = FieldSpec());

/// Both layouts place point (a, h) of A x H at a*deg(H) + h: copies of A
/// act on the blocks {h, deg(H)+h, ...}, H acts identically on every
/// contiguous run of deg(H) points.
std::vector<Permutation> wreath_generators(const std::vector<Permutation>& a_gens, std::size_t a_degree,
                                           const std::vector<Permutation>& h_gens, std::size_t h_degree,
                                           Layout layout);

/// S_p x S_q on Z_pq through k <-> (k mod p, k mod q).
std::vector<Permutation> crt_product_generators(std::uint64_t p, std::uint64_t q);

/// Tags: Sym, Cyclic, AGL1, PSL2_7, C31xC5.
std::vector<Permutation> named_group_generators(std::string_view tag, std::size_t degree);

/// Greedy subset of g's generators that still generates g.
std::vector<Permutation> small_generating_set(const std::vector<Permutation>& gens);

/// Cached small generating set of Per(C_{n,gen}) over `field`; exhaustive
/// search up to degree 12, backtracking beyond.
struct PerLeaf {
  std::vector<Permutation> gens;
  BigInt order;
};
const PerLeaf& per_leaf(const FieldSpec& field, std::uint64_t n, const Poly& gen);

}  // namespace cycperm
