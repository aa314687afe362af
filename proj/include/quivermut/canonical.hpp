#pragma once

#include <cstdint>
#include <vector>

namespace quivermut {

/// Vertex-colored digraph with integer arc codes; code 0 means "no arc".
struct ColoredDigraph {
  std::size_t size = 0;
  std::vector<std::int32_t> arcs;    // size * size, row-major
  std::vector<std::int64_t> colors;  // one per vertex; order of colors is significant
};

struct CanonicalLabeling {
  std::vector<std::size_t> relabeling;  // old vertex -> new vertex
  std::vector<std::int32_t> form;       // arcs after relabeling
  std::vector<std::vector<std::size_t>> automorphisms;  // generators found during search
};

/// Individualization-refinement canonical labeling with automorphism pruning.
CanonicalLabeling canonical_labeling(const ColoredDigraph& g);

}  // namespace quivermut
