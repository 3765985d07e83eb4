#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cycperm/bigint.hpp"
#include "cycperm/cyclic_code.hpp"

namespace cycperm {

/// A bijection of {0..n-1}; images()[i] is sigma(i).
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  /// Cycles use 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint32_t> images, Unchecked) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
};

/// pi(i) = sigma(tau(i)). With the right action c^sigma below,
/// (c^sigma)^tau = c^compose(sigma, tau).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
Permutation perm_pow(const Permutation& sigma, std::int64_t e);
/// Order of the cyclic group generated by sigma.
BigInt perm_order(const Permutation& sigma);

/// result[i] = c[sigma(i)]
Codeword apply_perm(const Codeword& c, const Permutation& sigma);

/// "(0 1 2)(3 4)"; the identity prints as "()".
std::string format_cycles(const Permutation& sigma);
Permutation parse_cycles(std::string_view text, std::size_t n);

/// A permutation group with a stabilizer chain built by deterministic
/// Schreier-Sims. Orders are exact.
class PermGroup {
 public:
  PermGroup() = default;
  /// The trivial group of degree n.
  explicit PermGroup(std::size_t degree);

  std::size_t degree() const { return degree_; }
  /// Generators as supplied (including redundant ones).
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<std::uint32_t>& base() const { return base_; }
  BigInt order() const;
  std::size_t strong_generator_count() const { return strong_.size(); }

  bool contains(const Permutation& g) const;
  /// Adds g and restores the chain; returns false when g was already a member.
  bool add_generator(const Permutation& g);

  /// Orbit of `point` under the whole group, sorted.
  std::vector<std::uint32_t> orbit(std::uint32_t point) const;
  /// Orbit sizes along the chain; their product is the order.
  std::vector<std::size_t> basic_orbit_sizes() const;

  /// Uniform element from one transversal pick per level; `pick(bound)`
  /// returns a uniform integer in [0, bound).
  template <class Pick>
  Permutation random_element(Pick&& pick) const {
    Permutation g = Permutation::identity(degree_);
    for (const auto& lv : levels_) g = compose(g, lv.u[static_cast<std::size_t>(pick(lv.orbit.size()))]);
    return g;
  }

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<std::uint32_t> gens;    // indices into strong_
    std::vector<std::uint32_t> orbit;   // in discovery order
    std::vector<std::int32_t> pos;      // point -> index in orbit, -1 if absent
    std::vector<Permutation> u, uinv;   // u[k] maps point to orbit[k]
    std::vector<std::uint32_t> parent_gen;  // generator index (into gens) that first reached orbit[k]
    std::vector<std::uint32_t> parent_pos;  // orbit index it came from
    std::vector<std::uint32_t> applied;     // gens applied for orbit growth, per orbit entry
    std::vector<std::uint32_t> checked;     // gens checked for Schreier generators, per orbit entry
  };

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> strong_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;

  void new_level(std::uint32_t point);
  void add_strong(std::size_t level, std::uint32_t strong_index);
  void grow_orbit(Level& lv);
  // Sifts g from `from`; returns the residue and the level where it stopped
  // (levels_.size() when it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void complete(std::size_t start);
};

PermGroup group_from_generators(const std::vector<Permutation>& gens);
bool group_contains(const PermGroup& g, const Permutation& sigma);
bool groups_equal(const PermGroup& a, const PermGroup& b);

}  // namespace cycperm
