#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "quivermut/permutation_group.hpp"
#include "quivermut/quiver.hpp"
#include "quivermut/seed.hpp"

namespace quivermut {

struct LayerReport {
  std::size_t depth = 0;   // layer just completed
  std::size_t count = 0;   // items found so far
  double seconds = 0;
};

struct ClassConfig {
  std::optional<std::size_t> depth;  // unset: unbounded
  bool up_to_equivalence = true;
  bool only_sink_source = false;
  std::function<void(const LayerReport&)> on_layer;
  const std::atomic<bool>* cancel = nullptr;
};

template <class T>
struct ClassItem {
  T value;
  std::vector<std::size_t> path;  // a shortest mutation word from the root
  std::size_t depth = 0;
};

/// Lazy breadth-first walk of a mutation class; T is Quiver or Seed.
template <class T>
class ClassIterator {
 public:
  ClassIterator(T root, ClassConfig cfg);
  std::optional<ClassItem<T>> next();
  std::size_t found() const { return seen_.size(); }

 private:
  bool expand_one();
  std::string key(const T& v) const;

  ClassConfig cfg_;
  std::unordered_set<std::string> seen_;
  std::deque<ClassItem<T>> ready_;      // discovered, not yet handed out
  std::vector<ClassItem<T>> layer_;     // current layer being expanded
  std::vector<ClassItem<T>> next_layer_;
  std::size_t layer_pos_ = 0;
  std::size_t layer_depth_ = 0;
  bool done_ = false;
  std::chrono::steady_clock::time_point start_;
};

using QuiverClassIterator = ClassIterator<Quiver>;
using SeedClassIterator = ClassIterator<Seed>;

/// Canonical key of a seed up to simultaneous permutation (cluster values act as vertex colors).
std::string seed_key(const Seed& s, bool up_to_equivalence);

/// Largest |b_ij * b_ji| over pairs of free vertices whose component has at least `min_component` vertices.
Integer max_weight_product(const ExchangeMatrix& b, std::size_t min_component = 1);

/// Random mutation walk (never repeating a vertex twice in a row); returns the word up to the first
/// quiver with |b_ij b_ji| > 4 on a component of size >= 3, if one is met within `steps`.
std::optional<std::vector<std::size_t>> find_weight_violation(const ExchangeMatrix& b, std::size_t steps,
                                                              std::uint64_t seed);

/// Finite type test: walk the class of the top block, aborting once some |b_ij b_ji| exceeds 3.
bool is_finite_type(const ExchangeMatrix& b);

/// Materialized classes. Unbounded requests that cannot be shown finite throw UnboundedRequest.
std::vector<ClassItem<Quiver>> mutation_class(const Quiver& root, const ClassConfig& cfg = {});
std::vector<ClassItem<Seed>> seed_class(const Seed& root, const ClassConfig& cfg = {});
std::vector<ExchangeMatrix> b_matrix_class(const ExchangeMatrix& root, const ClassConfig& cfg = {});
std::vector<std::vector<RationalFunction>> cluster_class(const Seed& root, const ClassConfig& cfg = {});

struct VariableClass {
  std::vector<RationalFunction> variables;  // sorted
  bool used_belt = false;
  std::vector<std::size_t> path_to_bipartite;  // empty if the root is bipartite
  std::optional<std::size_t> belt_period;  // labeled period of single-direction belt steps, finite type only
};

/// Cluster variables reachable from the seed. With the belt, depth d covers Sigma_m for |m| <= 2d.
VariableClass variable_class(const Seed& root, std::optional<std::size_t> depth = std::nullopt,
                             bool ignore_bipartite_belt = false,
                             const std::function<void(const std::string&)>& notice = {},
                             const std::atomic<bool>* cancel = nullptr);

/// The belt around a bipartite seed: Sigma_m for -steps <= m <= steps, index steps + m.
std::vector<Seed> bipartite_belt(const Seed& base, std::size_t steps);

struct MutationGroup {
  std::vector<std::string> ground_set;  // labeled keys
  PermutationGroup group;
};
MutationGroup group_of_mutations(const Quiver& root);
MutationGroup group_of_mutations(const Seed& root);

}  // namespace quivermut
