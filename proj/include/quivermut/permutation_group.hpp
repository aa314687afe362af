#pragma once

#include <cstdint>
#include <vector>

#include "quivermut/integer.hpp"

namespace quivermut {

using Permutation = std::vector<std::uint32_t>;  // image of each point

/// Permutation group on {0..degree-1} with a stabilizer chain built by Schreier-Sims.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  Integer order() const;
  bool contains(const Permutation& p) const;
  const std::vector<std::uint32_t>& base() const { return base_; }

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> transversal;  // orbit point -> index into reps, -1 if absent
    std::vector<Permutation> reps;          // reps[t] maps point to the orbit element
    std::vector<std::uint32_t> orbit;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pending;  // (orbit index, generator index)
  };
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void add_generator(const Permutation& g, std::size_t level);
  void process(std::size_t level);
  void add_orbit_point(Level& lv, std::uint32_t q, Permutation rep);

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
};

Permutation compose(const Permutation& outer, const Permutation& inner);  // outer after inner
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);

}  // namespace quivermut
