#include <algorithm>
#include <limits>

#include "cycperm/error.hpp"
#include "cycperm/permutation.hpp"

namespace cycperm {

namespace {
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
}

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const auto& lv : levels_) o *= lv.orbit.size();
  return o;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

void PermGroup::new_level(std::uint32_t point) {
  Level lv;
  lv.point = point;
  lv.pos.assign(degree_, -1);
  lv.pos[point] = 0;
  lv.orbit.push_back(point);
  lv.u.push_back(Permutation::identity(degree_));
  lv.uinv.push_back(Permutation::identity(degree_));
  lv.parent_gen.push_back(kNone);
  lv.parent_pos.push_back(kNone);
  lv.applied.push_back(0);
  lv.checked.push_back(0);
  levels_.push_back(std::move(lv));
  base_.push_back(point);
}

void PermGroup::grow_orbit(Level& lv) {
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    while (lv.applied[k] < lv.gens.size()) {
      const std::uint32_t t = lv.applied[k]++;
      const Permutation& s = strong_[lv.gens[t]];
      const std::uint32_t gamma = s(lv.orbit[k]);
      if (lv.pos[gamma] >= 0) continue;
      lv.pos[gamma] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(gamma);
      Permutation u = compose(s, lv.u[k]);
      lv.uinv.push_back(inverse(u));
      lv.u.push_back(std::move(u));
      lv.parent_gen.push_back(t);
      lv.parent_pos.push_back(static_cast<std::uint32_t>(k));
      lv.applied.push_back(0);
      lv.checked.push_back(0);
    }
  }
}

void PermGroup::add_strong(std::size_t level, std::uint32_t strong_index) {
  levels_[level].gens.push_back(strong_index);
  grow_orbit(levels_[level]);
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const std::int32_t q = lv.pos[g(lv.point)];
    if (q < 0) return {std::move(g), l};
    if (q > 0) g = compose(lv.uinv[static_cast<std::size_t>(q)], g);
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::complete(std::size_t start) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    Level* lv = &levels_[static_cast<std::size_t>(i)];
    bool jumped = false;
    for (std::size_t k = 0; k < lv->orbit.size() && !jumped; ++k) {
      while (lv->checked[k] < lv->gens.size()) {
        const std::uint32_t t = lv->checked[k];
        const Permutation& s = strong_[lv->gens[t]];
        const std::uint32_t gamma = s(lv->orbit[k]);
        const auto q = static_cast<std::size_t>(lv->pos[gamma]);
        if (lv->parent_pos[q] == k && lv->parent_gen[q] == t) {
          ++lv->checked[k];
          continue;
        }
        Permutation schreier = compose(lv->uinv[q], compose(s, lv->u[k]));
        auto [h, j] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && h.is_identity()) {
          ++lv->checked[k];
          continue;
        }
        if (j == levels_.size()) {
          std::uint32_t moved = 0;
          while (h(moved) == moved) ++moved;
          new_level(moved);
          lv = &levels_[static_cast<std::size_t>(i)];
        }
        strong_.push_back(std::move(h));
        const auto idx = static_cast<std::uint32_t>(strong_.size() - 1);
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) add_strong(l, idx);
        i = static_cast<std::ptrdiff_t>(j);
        jumped = true;
        break;
      }
    }
    if (!jumped) --i;
  }
}

bool PermGroup::add_generator(const Permutation& g) {
  if (degree_ == 0 && gens_.empty() && levels_.empty()) degree_ = g.degree();
  if (g.degree() != degree_)
    throw Error(ErrorCode::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                               " for group of degree " + std::to_string(degree_));
  gens_.push_back(g);
  auto [h, j] = strip(g, 0);
  if (j == levels_.size() && h.is_identity()) return false;
  if (j == levels_.size()) {
    std::uint32_t moved = 0;
    while (h(moved) == moved) ++moved;
    new_level(moved);
  }
  strong_.push_back(std::move(h));
  const auto idx = static_cast<std::uint32_t>(strong_.size() - 1);
  for (std::size_t l = 0; l <= j; ++l) add_strong(l, idx);
  complete(j);
  return true;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw Error(ErrorCode::DegreeMismatch, "permutation of degree " + std::to_string(g.degree()) +
                                               " against group of degree " + std::to_string(degree_));
  auto [h, j] = strip(g, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> out = {point};
  seen[point] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : strong_) {
      const auto y = s(out[k]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup group_from_generators(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  PermGroup g(gens.front().degree());
  for (const auto& s : gens) g.add_generator(s);
  return g;
}

bool group_contains(const PermGroup& g, const Permutation& sigma) { return g.contains(sigma); }

bool groups_equal(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch, "groups of degree " + std::to_string(a.degree()) + " and " +
                                               std::to_string(b.degree()));
  if (a.order() != b.order()) return false;
  for (const auto& s : a.generators())
    if (!b.contains(s)) return false;
  for (const auto& s : b.generators())
    if (!a.contains(s)) return false;
  return true;
}

}  // namespace cycperm
