#include <algorithm>
#include <numeric>

#include "code_kernel.hpp"
#include "cycperm/autgroup.hpp"
#include "cycperm/error.hpp"
#include "cycperm/group_expr.hpp"
#include "cycperm/threads.hpp"

namespace cycperm {

PermGroup exhaustive_per_group(const CyclicCodeSpec& code, std::size_t cutoff, unsigned threads) {
  const std::size_t n = code.n();
  if (n > cutoff)
    throw Error(ErrorCode::TooLarge, "exhaustive search over " + std::to_string(n) + "! permutations exceeds cutoff " +
                                         std::to_string(cutoff));
  // Every permutation preserves the zero code and the full space.
  if (code.k() == 0 || code.gen().degree() == 0) return group_from_generators(named_group_generators("Sym", n));

  const auto& kernel = code.kernel();
  const std::size_t k = code.k();

  // Worker w handles the permutations whose inverse sends coordinate 0 to w.
  std::vector<std::vector<Permutation>> found(n);
  parallel_for(n, threads, [&](std::size_t first) {
    auto scratch = kernel.make_scratch();
    std::vector<std::uint32_t> inv(n);
    inv[0] = static_cast<std::uint32_t>(first);
    for (std::size_t i = 1, v = 0; i < n; ++i, ++v) {
      if (v == first) ++v;
      inv[i] = static_cast<std::uint32_t>(v);
    }
    PermGroup local(n);
    std::vector<std::uint32_t> images(n);
    do {
      std::size_t b = 0;
      while (b < k && kernel.basis_preserved(b, inv.data(), scratch)) ++b;
      if (b < k) continue;
      for (std::size_t s = 0; s < n; ++s) images[inv[s]] = static_cast<std::uint32_t>(s);
      Permutation sigma(images);
      if (!local.contains(sigma)) {
        local.add_generator(sigma);
        found[first].push_back(std::move(sigma));
      }
    } while (std::next_permutation(inv.begin() + 1, inv.end()));
  });

  PermGroup g(n);
  for (const auto& list : found)
    for (const auto& s : list)
      if (!g.contains(s)) g.add_generator(s);
  return g;
}

}  // namespace cycperm
