#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivermut/cluster_variable.hpp"
#include "quivermut/exchange_matrix.hpp"
#include "quivermut/quiver.hpp"
#include "quivermut/rational_function.hpp"

namespace quivermut {

/// Labeled seed of geometric type: exchange matrix, ordered cluster, frozen variables.
class Seed {
 public:
  explicit Seed(ExchangeMatrix b);
  explicit Seed(const Quiver& q) : Seed(q.matrix()) {}
  /// Explicit ring; it must have at least n x-names and m y-names.
  Seed(ExchangeMatrix b, RingPtr ring);

  std::size_t n() const { return b_.n(); }
  std::size_t m() const { return b_.m(); }
  const RingPtr& ring() const { return ring_; }
  std::string ground_field() const { return ring_->description(); }

  const ExchangeMatrix& matrix() const { return b_; }
  ExchangeMatrix b_matrix() const { return b_; }
  Quiver quiver() const { return Quiver(b_); }

  const std::vector<RationalFunction>& cluster() const { return cluster_; }
  const std::vector<RationalFunction>& frozen() const { return frozen_; }
  std::vector<ClusterVariable> exchangeable_variables() const;
  std::vector<ClusterVariable> frozen_variables() const;
  /// Initial variables x_k, y_k of the ring (not the current cluster).
  RationalFunction x(std::size_t k) const;
  RationalFunction y(std::size_t k) const;
  std::vector<std::string> cluster_strings() const;
  std::string render(const RationalFunction& f) const { return f.to_string(ring_->names()); }

  void mutate_in_place(std::size_t k);
  void mutate_in_place(const std::vector<std::size_t>& ks);
  Seed mutate(std::size_t k) const;
  Seed mutate(const std::vector<std::size_t>& ks) const;

  /// One seed per step, initial excluded.
  std::vector<Seed> mutation_seeds(const std::vector<std::size_t>& ks) const;
  /// Initial matrix followed by one matrix per step.
  std::vector<ExchangeMatrix> mutation_matrices(const std::vector<std::size_t>& ks) const;
  /// The new variable produced at each step.
  std::vector<RationalFunction> mutation_variables(const std::vector<std::size_t>& ks) const;

  void set_cluster(const std::vector<RationalFunction>& values);
  void set_cluster(const std::vector<std::string>& values);
  void reset_cluster();

  Seed principal_extension() const;
  /// Keeps the top block and the exchangeable values verbatim, along with the ring.
  Seed principal_restriction() const;

  const std::optional<std::string>& mutation_type() const { return type_; }
  void set_mutation_type(std::optional<std::string> t) { type_ = std::move(t); }

  std::string description() const;

  bool operator==(const Seed& o) const { return b_ == o.b_ && cluster_ == o.cluster_ && frozen_ == o.frozen_; }

 private:
  void check_index(std::size_t k) const;
  ExchangeMatrix b_;
  RingPtr ring_;
  std::vector<RationalFunction> cluster_, frozen_;
  std::optional<std::string> type_;
};

}  // namespace quivermut
