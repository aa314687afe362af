#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "quivermut/exchange_matrix.hpp"

namespace quivermut {

/// Arc i -> j carrying the pair (b_ij, b_ji) with b_ij > 0 > b_ji.
struct QuiverEdge {
  std::size_t from = 0, to = 0;
  Integer b, c;
  bool operator==(const QuiverEdge&) const = default;
};

/// Edge given to the digraph constructor: no label, an integer label, or an explicit pair.
struct EdgeSpec {
  std::size_t from = 0, to = 0;
  std::variant<std::monostate, Integer, std::pair<Integer, Integer>> label;
};

struct Bipartition {
  std::vector<std::size_t> sources;  // isolated vertices land here
  std::vector<std::size_t> sinks;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(ExchangeMatrix b) : b_(std::move(b)) {}

  /// Vertices are 0..vertex_count-1; the last `frozen` of them are frozen.
  static Quiver from_edges(const std::vector<EdgeSpec>& edges, std::size_t vertex_count, std::size_t frozen = 0);
  /// Whitespace-separated lines "i j b c".
  static Quiver from_edge_list(std::string_view text, std::size_t vertex_count = 0, std::size_t frozen = 0);

  std::size_t n() const { return b_.n(); }
  std::size_t m() const { return b_.m(); }
  std::size_t vertex_count() const { return b_.rows(); }
  const ExchangeMatrix& matrix() const { return b_; }

  /// b_ij with the frozen-column convention b_ji = -b_ij for frozen i.
  Integer weight(std::size_t i, std::size_t j) const;
  std::vector<QuiverEdge> edges() const;
  std::string edge_list() const;

  Quiver mutate(std::size_t k) const { return Quiver(b_.mutate(k)); }
  Quiver permuted(const std::vector<std::size_t>& p) const { return Quiver(b_.permuted(p)); }

  bool is_acyclic() const;
  bool is_bipartite() const { return bipartition().has_value(); }
  /// Over free vertices: each must be a sink or a source of the free part.
  std::optional<Bipartition> bipartition() const;
  bool is_sink(std::size_t k) const;    // in the full quiver
  bool is_source(std::size_t k) const;  // in the full quiver

  /// Orient every edge from the earlier to the later vertex of `order` (all vertices).
  Quiver reorient(const std::vector<std::size_t>& order) const;
  /// Reverse each listed edge (given as an existing arc from -> to).
  Quiver reorient(const std::vector<std::pair<std::size_t, std::size_t>>& arcs) const;

  /// Free vertices on the unit circle, frozen ones on radius 1.5.
  std::vector<std::pair<double, double>> layout_circular() const;

  /// Connected components of the free part (frozen vertices ignored).
  std::vector<std::vector<std::size_t>> components() const;

  bool operator==(const Quiver& o) const { return b_ == o.b_; }

 private:
  ExchangeMatrix b_;
};

/// "Q<n>,<m>|" followed by "i,j,b,c;" for each arc sorted by (i, j).
std::string encode(const Quiver& q);
Quiver decode(std::string_view text);

struct CanonicalQuiver {
  Quiver quiver;
  std::vector<std::size_t> relabeling;  // old -> new
};

/// Canonical representative under simultaneous permutation of free and of frozen vertices.
/// Optional colors distinguish vertices (one per vertex, equal colors interchangeable).
CanonicalQuiver canonical_form(const Quiver& q, const std::vector<std::string>* colors = nullptr);
/// Encoding of the canonical form.
std::string canonical_key(const Quiver& q);

bool is_isomorphic(const Quiver& a, const Quiver& b);

}  // namespace quivermut
