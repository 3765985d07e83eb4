#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "cycperm/bigint.hpp"

namespace cycperm {

using Residue = std::uint32_t;

/// An element of F_{r^alpha}: exactly alpha residues mod r, ascending powers
/// of the field generator y. Equality is plain sequence equality.
class FFElement {
 public:
  using Storage = boost::container::small_vector<Residue, 4>;

  FFElement() = default;
  explicit FFElement(Storage coeffs) : coeffs_(std::move(coeffs)) {}
  FFElement(std::initializer_list<Residue> coeffs) : coeffs_(coeffs) {}

  std::span<const Residue> coeffs() const { return {coeffs_.data(), coeffs_.size()}; }
  std::size_t size() const { return coeffs_.size(); }
  Residue operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  friend bool operator==(const FFElement& a, const FFElement& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const FFElement& a, const FFElement& b) {
    return a.coeffs_ < b.coeffs_;
  }

 private:
  Storage coeffs_;
};

/// The field F_{r^alpha} = Z_r[y] / (modulus). Cheap to copy; immutable.
class FieldSpec {
 public:
  /// F_2; lets containers of field-carrying values be default constructed.
  FieldSpec();

  std::uint32_t r() const { return data_->r; }
  std::uint32_t alpha() const { return data_->alpha; }
  /// Monic modulus, ascending coefficients, length alpha + 1. Empty for alpha == 1.
  std::span<const Residue> modulus() const { return data_->modulus; }
  /// Number of elements q = r^alpha.
  std::uint64_t order() const { return data_->q; }

  FFElement zero() const;
  FFElement one() const;
  /// Validating constructor from residues (length alpha, entries < r).
  FFElement element(std::span<const Residue> coeffs) const;
  /// Image of an integer in the prime subfield.
  FFElement from_integer(std::int64_t value) const;
  /// Index encoding: coefficient i is base-r digit i (c_0 least significant).
  FFElement from_index(std::uint64_t index) const;
  std::uint64_t index_of(const FFElement& a) const;
  bool is_valid(const FFElement& a) const;

  /// "r" for prime fields, "r^alpha" otherwise.
  std::string descriptor() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Data {
    std::uint32_t r = 0;
    std::uint32_t alpha = 0;
    std::vector<Residue> modulus;
    std::uint64_t q = 0;
  };
  explicit FieldSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend FieldSpec make_field(std::uint32_t, std::uint32_t, std::optional<std::vector<Residue>>);
};

/// Validates (r prime, modulus monic irreducible of degree alpha). With no
/// modulus and alpha > 1, picks the smallest monic irreducible where
/// candidates are ordered by their coefficient vector read from the top
/// degree down (equivalently, by base-r value with c_0 least significant).
FieldSpec make_field(std::uint32_t r, std::uint32_t alpha = 1,
                     std::optional<std::vector<Residue>> modulus = std::nullopt);

/// Parses "r" or "r^alpha"; modulus, when given, is comma-separated
/// ascending residues.
FieldSpec parse_field(std::string_view descriptor,
                      std::optional<std::string_view> modulus = std::nullopt);

FFElement ff_add(const FFElement& a, const FFElement& b, const FieldSpec& f);
FFElement ff_sub(const FFElement& a, const FFElement& b, const FieldSpec& f);
FFElement ff_neg(const FFElement& a, const FieldSpec& f);
FFElement ff_mul(const FFElement& a, const FFElement& b, const FieldSpec& f);
FFElement ff_inv(const FFElement& a, const FieldSpec& f);
FFElement ff_pow(const FFElement& a, std::uint64_t exponent, const FieldSpec& f);
FFElement ff_pow(const FFElement& a, const BigInt& exponent, const FieldSpec& f);

bool is_prime(std::uint64_t n);

/// Ben-Or test over Z_r: gcd(y^{r^i} - y, f) = 1 for all i <= deg f / 2.
/// `f` is ascending and must be monic.
bool is_irreducible_mod_prime(std::span<const Residue> f, std::uint32_t r);

/// Dense operation tables over the index encoding. The search kernels run on
/// these; limited to q <= 256 so an element fits in one byte.
class FieldTables {
 public:
  static constexpr std::uint64_t kMaxOrder = 256;

  explicit FieldTables(const FieldSpec& f);

  std::uint32_t q() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return sub_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

 private:
  std::uint32_t q_;
  std::vector<std::uint8_t> add_, sub_, mul_, neg_, inv_;
};

}  // namespace cycperm
