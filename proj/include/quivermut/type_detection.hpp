#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivermut/quiver.hpp"
#include "quivermut/seed.hpp"
#include "quivermut/type_registry.hpp"

namespace quivermut {

struct DetectionConfig {
  std::size_t rank_bound = 12;          // largest component rank searched by class enumeration
  std::size_t max_class = 250000;       // enumeration cap per component
  std::optional<std::size_t> nr_of_checks;  // random walk budget, default 1000 * n
  std::uint64_t rng_seed = 0x5eed;
};

struct DetectionVerdict {
  enum class Kind { finite_type, mutation_finite_unclassified, mutation_infinite, unknown };
  Kind kind = Kind::unknown;
  TypePtr type = nullptr;            // finite_type only (any catalogued type, not just finite ones)
  std::vector<std::size_t> witness;  // mutation_infinite: replays to a quiver violating the weight bound
  std::string method;                // rank-one, rank-two, memo, catalog, class-membership, random-walk, ...
  std::string key;                   // canonical key the verdict was matched on
  std::vector<std::size_t> path;     // class-membership: word from the input to a standard representative

  std::string json() const;
};

std::string kind_name(DetectionVerdict::Kind k);

/// Class walk with abort at |b_ij b_ji| > 3.
bool is_finite(const Quiver& q);
bool is_finite(const Seed& s);

struct MutationFiniteCheck {
  bool finite = true;  // one-sided: true may be wrong, false never is
  std::vector<std::size_t> path;
  std::size_t checks = 0;
};

/// Random mutation walk watching |b_ij b_ji| <= 4 on components of size >= 3.
MutationFiniteCheck is_mutation_finite(const Quiver& q, std::optional<std::size_t> nr_of_checks = std::nullopt,
                                       std::uint64_t rng_seed = 0x5eed);
MutationFiniteCheck is_mutation_finite(const Seed& s, std::optional<std::size_t> nr_of_checks = std::nullopt,
                                       std::uint64_t rng_seed = 0x5eed);

/// Does the path, applied to q, pass through a quiver violating the bound?
bool replays_to_violation(const Quiver& q, const std::vector<std::size_t>& path);

DetectionVerdict mutation_type(const Quiver& q, const DetectionConfig& cfg = {});
/// Also records the type on the seed when one is found.
DetectionVerdict mutation_type(Seed& s, const DetectionConfig& cfg = {});

/// Catalogued exceptional classes, by designation.
std::vector<std::pair<TypePtr, std::size_t>> exceptional_catalog();

void clear_detection_cache();

}  // namespace quivermut
