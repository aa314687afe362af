#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivermut/exchange_matrix.hpp"
#include "quivermut/rational_function.hpp"

namespace quivermut {

/// A cluster variable: a rational function together with the ring naming its variables.
class ClusterVariable {
 public:
  ClusterVariable(RationalFunction value, RingPtr ring);

  const RationalFunction& value() const { return value_; }
  const RingPtr& ring() const { return ring_; }
  std::string to_string() const { return value_.to_string(ring_->names()); }

  /// Exponents of x_0..x_{n-1} in the denominator; -e_i for the initial variable x_i.
  std::vector<long> denominator_vector() const;
  long degree() const;

  bool operator==(const ClusterVariable& o) const { return value_ == o.value_; }

 private:
  RationalFunction value_;
  RingPtr ring_;
};

/// x_k' = (prod_{b_ik>0} x_i^{b_ik} + prod_{b_ik<0} x_i^{-b_ik}) / x_k over all n+m rows.
RationalFunction exchange(const std::vector<RationalFunction>& cluster, const std::vector<RationalFunction>& frozen,
                          const ExchangeMatrix& b, std::size_t k);

/// Denominator vector of a value over n initial variables; throws NotLaurent.
std::vector<long> denominator_vector(const RationalFunction& v, std::size_t nx);

/// Strict weak order used for sorted variable lists: total d-vector degree, then
/// d-vectors in descending lexicographic order, then the rendered text.
bool variable_less(const RationalFunction& a, const RationalFunction& b, const Ring& ring);

/// Same order on ClusterVariable; mixing rings is an error.
bool operator<(const ClusterVariable& a, const ClusterVariable& b);

}  // namespace quivermut
