#include <chrono>
#include <functional>
#include <optional>

#include "code_kernel.hpp"
#include "cycperm/autgroup.hpp"
#include "cycperm/error.hpp"
#include "cycperm/random.hpp"
#include "cycperm/threads.hpp"

namespace cycperm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool kernel_usable(const CyclicCodeSpec& code) { return code.field().order() <= FieldTables::kMaxOrder; }

std::vector<std::uint32_t> inverse_images(const Permutation& s) {
  std::vector<std::uint32_t> inv(s.degree());
  for (std::uint32_t i = 0; i < s.degree(); ++i) inv[s(i)] = i;
  return inv;
}

// Indices of basis words that sigma fails to preserve, at most `limit`.
std::vector<std::size_t> failing_basis(const CyclicCodeSpec& code, const Permutation& sigma, std::size_t limit) {
  std::vector<std::size_t> out;
  if (kernel_usable(code)) {
    const auto& kernel = code.kernel();
    auto scratch = kernel.make_scratch();
    const auto inv = inverse_images(sigma);
    for (std::size_t i = 0; i < code.k() && out.size() < limit; ++i)
      if (!kernel.basis_preserved(i, inv.data(), scratch)) out.push_back(i);
    return out;
  }
  const auto basis = basis_words(code);
  for (std::size_t i = 0; i < basis.size() && out.size() < limit; ++i)
    if (!contains(code, apply_perm(basis[i], sigma))) out.push_back(i);
  return out;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Exhaustive: return "Exhaustive";
    case Method::Backtrack: return "Backtrack";
    case Method::Certify: return "Certify";
  }
  return "Certify";
}

Method parse_method(std::string_view name) {
  if (name == "Exhaustive" || name == "brute" || name == "exhaustive") return Method::Exhaustive;
  if (name == "Backtrack" || name == "backtrack") return Method::Backtrack;
  if (name == "Certify" || name == "certify") return Method::Certify;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

CodeDescriptor describe(const CyclicCodeSpec& code) {
  CodeDescriptor d;
  d.field = code.field().descriptor();
  for (std::size_t i = 0; i < code.field().modulus().size(); ++i) {
    if (i) d.modulus += ',';
    d.modulus += std::to_string(code.field().modulus()[i]);
  }
  d.n = code.n();
  d.gen = format_poly(code.gen());
  return d;
}

bool preserves_code(const CyclicCodeSpec& code, const Permutation& sigma) {
  if (sigma.degree() != code.n())
    throw Error(ErrorCode::DegreeMismatch, "permutation degree " + std::to_string(sigma.degree()) +
                                               " vs code length " + std::to_string(code.n()));
  return failing_basis(code, sigma, 1).empty();
}

VerificationReport certify_subgroup(const CyclicCodeSpec& code, const std::vector<Permutation>& gens,
                                    const std::optional<GroupExpr>& claim, const CertifyOptions& options) {
  const auto start = Clock::now();
  for (const auto& s : gens)
    if (s.degree() != code.n())
      throw Error(ErrorCode::DegreeMismatch, "generator degree " + std::to_string(s.degree()) + " vs code length " +
                                                 std::to_string(code.n()));
  VerificationReport rep;
  rep.code = describe(code);
  rep.method = Method::Certify;
  if (kernel_usable(code)) (void)code.kernel();

  std::vector<std::vector<std::size_t>> per_gen(gens.size());
  parallel_for(gens.size(), options.threads,
               [&](std::size_t i) { per_gen[i] = failing_basis(code, gens[i], options.max_failures); });
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto b : per_gen[i])
      if (rep.failures.size() < options.max_failures) rep.failures.push_back({i, b});
  rep.certified = true;
  for (const auto& f : per_gen)
    if (!f.empty()) rep.certified = false;

  if (claim) {
    rep.predicted = format_group_expr(*claim);
    rep.predicted_order = symbolic_order(*claim, code.field());
  }
  if (code.n() <= options.order_cap)
    rep.computed_order = gens.empty() ? BigInt(1) : group_from_generators(gens).order();
  rep.elapsed_ms = ms_since(start);
  return rep;
}

namespace {

VerificationReport sample(const CyclicCodeSpec& code, std::uint64_t trials, std::uint64_t seed, std::size_t keep,
                          const std::function<bool(const Permutation&)>& member) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  const auto start = Clock::now();
  VerificationReport rep;
  rep.code = describe(code);
  rep.method = Method::Certify;
  rep.trials = trials;
  rep.seed = seed;
  rep.rng = std::string(Rng::kAlgorithm);
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Permutation sigma = random_permutation(code.n(), rng);
    if (!preserves_code(code, sigma) || member(sigma)) continue;
    ++rep.counterexample_count;
    if (rep.counterexamples.size() < keep) rep.counterexamples.push_back(std::move(sigma));
  }
  rep.certified = rep.counterexample_count == 0;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace

VerificationReport falsify_by_sampling(const CyclicCodeSpec& code, const PermGroup& claimed, std::uint64_t trials,
                                       std::uint64_t seed, std::size_t keep) {
  if (claimed.degree() != code.n())
    throw Error(ErrorCode::DegreeMismatch, "claimed group degree " + std::to_string(claimed.degree()) +
                                               " vs code length " + std::to_string(code.n()));
  VerificationReport rep =
      sample(code, trials, seed, keep, [&](const Permutation& s) { return claimed.contains(s); });
  rep.computed_order = claimed.order();
  return rep;
}

VerificationReport falsify_by_sampling(const CyclicCodeSpec& code, const std::vector<Permutation>& claimed_gens,
                                       std::uint64_t trials, std::uint64_t seed, std::size_t keep) {
  // The chain is only built if some sample actually preserves the code.
  std::optional<PermGroup> group;
  return sample(code, trials, seed, keep, [&](const Permutation& s) {
    if (!group) group = claimed_gens.empty() ? PermGroup(code.n()) : group_from_generators(claimed_gens);
    return group->contains(s);
  });
}

}  // namespace cycperm
