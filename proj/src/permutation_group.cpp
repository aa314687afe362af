#include "quivermut/permutation_group.hpp"

#include "quivermut/errors.hpp"

namespace quivermut {

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.size() != degree_) throw InvalidInput("generator has the wrong degree");
    std::vector<bool> hit(degree_, false);
    for (auto x : g) {
      if (x >= degree_ || hit[x]) throw InvalidInput("generator is not a permutation");
      hit[x] = true;
    }
  }
  for (const auto& g : gens_) add_generator(g, 0);
}

std::pair<Permutation, std::size_t> PermutationGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto& lv = levels_[i];
    auto t = lv.transversal[g[lv.point]];
    if (t < 0) return {std::move(g), i};
    g = compose(inverse(lv.reps[static_cast<std::size_t>(t)]), g);
  }
  return {std::move(g), levels_.size()};
}

void PermutationGroup::add_orbit_point(Level& lv, std::uint32_t q, Permutation rep) {
  lv.transversal[q] = static_cast<std::int32_t>(lv.reps.size());
  lv.reps.push_back(std::move(rep));
  auto idx = static_cast<std::uint32_t>(lv.orbit.size());
  lv.orbit.push_back(q);
  for (std::uint32_t s = 0; s < lv.gens.size(); ++s) lv.pending.emplace_back(idx, s);
}

void PermutationGroup::add_generator(const Permutation& g, std::size_t level) {
  auto [h, j] = strip(g, level);
  if (is_identity(h)) return;
  if (j == levels_.size()) {
    Level lv;
    std::uint32_t p = 0;
    while (h[p] == p) ++p;
    lv.point = p;
    lv.transversal.assign(degree_, -1);
    Permutation id(degree_);
    for (std::size_t i = 0; i < degree_; ++i) id[i] = static_cast<std::uint32_t>(i);
    levels_.push_back(std::move(lv));
    base_.push_back(p);
    add_orbit_point(levels_.back(), p, std::move(id));
  }
  for (std::size_t l = level; l <= j; ++l) {
    auto& lv = levels_[l];
    auto s = static_cast<std::uint32_t>(lv.gens.size());
    lv.gens.push_back(h);
    for (std::uint32_t o = 0; o < lv.orbit.size(); ++o) lv.pending.emplace_back(o, s);
  }
  for (std::size_t l = j + 1; l-- > level;) process(l);
}

void PermutationGroup::process(std::size_t level) {
  while (!levels_[level].pending.empty()) {
    auto [o, s] = levels_[level].pending.back();
    levels_[level].pending.pop_back();
    auto& lv = levels_[level];
    std::uint32_t p = lv.orbit[o];
    const Permutation& gen = lv.gens[s];
    std::uint32_t q = gen[p];
    Permutation moved = compose(gen, lv.reps[static_cast<std::size_t>(lv.transversal[p])]);
    if (lv.transversal[q] < 0) {
      add_orbit_point(lv, q, std::move(moved));
      continue;
    }
    Permutation schreier = compose(inverse(lv.reps[static_cast<std::size_t>(lv.transversal[q])]), moved);
    if (!is_identity(schreier)) add_generator(schreier, level + 1);
  }
}

Integer PermutationGroup::order() const {
  Integer r = 1;
  for (const auto& lv : levels_) r *= static_cast<unsigned long>(lv.orbit.size());
  return r;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.size() != degree_) return false;
  return is_identity(strip(p, 0).first);
}

}  // namespace quivermut
