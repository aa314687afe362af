#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivermut/cluster_variable.hpp"
#include "quivermut/integer.hpp"
#include "quivermut/type_registry.hpp"

namespace quivermut {

/// Coefficients over the simple roots alpha_0..alpha_{n-1}.
using RootVector = std::vector<Rational>;

/// "alpha_1 + 2*alpha_2", "-alpha_3"; labels are 1-based.
std::string root_string(const RootVector& r);

/// Root system of a finite type, built from its Cartan matrix a_ij = -|b_ij|.
class RootSystem {
 public:
  explicit RootSystem(TypePtr t);

  TypePtr type() const { return type_; }
  std::size_t rank() const { return a_.size(); }
  const IntegerMatrix& cartan() const { return a_; }
  /// d_i = (alpha_i, alpha_i) / 2, with d_i a_ij symmetric.
  const std::vector<Rational>& half_lengths() const { return d_; }

  RootVector simple_root(std::size_t i) const;
  /// s_i(beta) = beta - (sum_j a_ij beta_j) alpha_i
  RootVector reflect(std::size_t i, const RootVector& beta) const;
  Rational form(const RootVector& x, const RootVector& y) const;
  /// beta^vee = 2 beta / (beta, beta), over the simple coroots.
  RootVector coroot(const RootVector& beta) const;

  const std::vector<RootVector>& positive_roots() const { return positive_; }
  /// Positive roots followed by -alpha_0 .. -alpha_{n-1}.
  std::vector<RootVector> almost_positive_roots() const;
  bool is_almost_positive(const RootVector& beta) const;

  /// S_+ holds the sources of the standard quiver, S_- the sinks.
  const std::vector<std::size_t>& plus_part() const { return plus_; }
  const std::vector<std::size_t>& minus_part() const { return minus_; }
  /// eps = +1 or -1.
  RootVector tau(int eps, const RootVector& beta) const;
  /// <tau_+, tau_->-orbits of the almost positive roots.
  std::vector<std::vector<RootVector>> tau_orbits() const;

  /// rho^vee = half the sum of positive coroots, over the simple coroots.
  RootVector rho_coroot() const;
  /// The coefficient [rho^vee, alpha_i^vee] shared by the -Delta members of beta's orbit.
  Rational c(const RootVector& beta) const;

 private:
  TypePtr type_;
  IntegerMatrix a_;
  std::vector<Rational> d_;
  std::vector<RootVector> positive_;
  std::vector<std::size_t> plus_, minus_;
};

/// The root of a cluster variable from its denominator vector; throws if it is not almost positive.
RootVector almost_positive_root(const RationalFunction& v, const RootSystem& rs);
RootVector almost_positive_root(const ClusterVariable& v, TypePtr t);

struct Halfspace {
  RootVector normal;  // beta
  Rational bound;     // <phi, beta> <= bound
};

struct AssociahedronRealization {
  TypePtr type = nullptr;
  std::size_t dimension = 0;
  std::vector<Halfspace> halfspaces;  // one per almost positive root, same order
  /// Translation applied to the raw constants c_beta: the negative-simple cluster sits at the origin.
  RootVector shift;
  std::optional<std::vector<RootVector>> vertices;  // rank <= 3 only
  /// Indices of the halfspaces tight at each vertex.
  std::vector<std::vector<std::size_t>> vertex_facets;

  /// One "c | b_0 ... b_{n-1}" line per halfspace.
  std::string export_halfspaces() const;
  std::string export_vertices() const;
  std::string description() const;
};

constexpr std::size_t kMaxVertexEnumerationRank = 3;

/// Half-spaces at any rank; vertices when enumerate is set (throws above rank 3).
AssociahedronRealization associahedron(TypePtr t, bool enumerate = true);

struct ClusterComplex {
  TypePtr type = nullptr;
  std::vector<RootVector> vertices;                // almost positive roots
  std::vector<std::vector<std::size_t>> facets;    // sorted vertex indices, one per cluster

  std::string export_facets() const;
  std::string description() const;  // "Simplicial complex with V vertices and F facets"
};

ClusterComplex cluster_complex(TypePtr t);

}  // namespace quivermut
