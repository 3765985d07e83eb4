#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycperm/bigint.hpp"
#include "cycperm/cyclic_code.hpp"
#include "cycperm/group_expr.hpp"
#include "cycperm/permutation.hpp"

namespace cycperm {

inline constexpr std::size_t kDefaultExhaustiveCutoff = 12;
inline constexpr std::size_t kDefaultOrderCap = 300;

/// Per(C) by running through all n! permutations. Throws TooLarge when
/// n > cutoff. threads = 0 uses default_thread_count().
PermGroup exhaustive_per_group(const CyclicCodeSpec& code, std::size_t cutoff = kDefaultExhaustiveCutoff,
                               unsigned threads = 0);

/// Per(C) by backtracking over coordinate images with codeword-derived
/// invariants. Needs min(q^k, q^(n-k)) <= cap.
PermGroup backtrack_per_group(const CyclicCodeSpec& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Structural prediction from the factorization of g; throws NoPattern or AmbiguousPattern.
GroupExpr predicted_group(const CyclicCodeSpec& code);

enum class Method { Exhaustive, Backtrack, Certify };
std::string_view method_name(Method m);
Method parse_method(std::string_view name);

struct CodeDescriptor {
  std::string field;  // "r" or "r^alpha"
  std::string modulus;  // canonical comma list, empty for prime fields
  std::size_t n = 0;
  std::string gen;  // canonical comma list

  friend bool operator==(const CodeDescriptor&, const CodeDescriptor&) = default;
};

CodeDescriptor describe(const CyclicCodeSpec& code);

struct FailingPair {
  std::size_t generator = 0;  // index into the certified generator list
  std::size_t basis_word = 0;  // i for the word x^i g(x)

  friend bool operator==(const FailingPair&, const FailingPair&) = default;
};

struct VerificationReport {
  CodeDescriptor code;
  Method method = Method::Certify;
  std::optional<std::string> predicted;  // group expression text
  std::optional<BigInt> predicted_order;
  std::optional<BigInt> computed_order;
  bool certified = false;
  std::optional<bool> equal;
  std::vector<FailingPair> failures;
  std::vector<Permutation> counterexamples;
  std::uint64_t counterexample_count = 0;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string rng;
  double elapsed_ms = 0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct CertifyOptions {
  std::size_t order_cap = kDefaultOrderCap;  // Schreier-Sims only up to this degree
  std::size_t max_failures = 64;              // failing pairs kept in the report
  unsigned threads = 0;
};

/// Checks every generator against every basis word. With a claim attached
/// the symbolic order is recorded; computed_order is the Schreier-Sims order
/// of <gens> when n <= order_cap.
VerificationReport certify_subgroup(const CyclicCodeSpec& code, const std::vector<Permutation>& gens,
                                    const std::optional<GroupExpr>& claim = std::nullopt,
                                    const CertifyOptions& options = {});

/// Code-preserving permutations among `trials` uniform samples that lie
/// outside `claimed` are counterexamples. Only the first `keep` are stored.
VerificationReport falsify_by_sampling(const CyclicCodeSpec& code, const PermGroup& claimed, std::uint64_t trials,
                                       std::uint64_t seed, std::size_t keep = 16);

/// Same, with the claimed group given by generators. The stabilizer chain
/// is built only once a sample preserves the code.
VerificationReport falsify_by_sampling(const CyclicCodeSpec& code, const std::vector<Permutation>& claimed_gens,
                                       std::uint64_t trials, std::uint64_t seed, std::size_t keep = 16);

/// True when every basis word maps into the code.
bool preserves_code(const CyclicCodeSpec& code, const Permutation& sigma);

}  // namespace cycperm
