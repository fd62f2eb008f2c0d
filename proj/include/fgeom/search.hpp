// Backtracking automorphism and isomorphism search for small vertex-colored
// graphs, pruned by colour refinement (1-dimensional Weisfeiler-Leman) and
// individualization.
#pragma once

#include <cstdint>
#include <vector>

#include "fgeom/incidence.hpp"
#include "fgeom/projgeom.hpp"

namespace fgeom {

struct ColoredGraph {
  Graph graph;
  std::vector<int> color;  // initial colours; maps must preserve them
};

/// Points coloured 0, lines coloured 1 (vertex order as incidence_graph).
ColoredGraph colored_incidence_graph(const IncidenceStructure& g);

using Permutation = std::vector<int>;

struct AutSearchResult {
  BigInt order;
  /// Sorted, each a permutation of the vertices.
  std::vector<Permutation> generators;
  std::uint64_t nodes = 0;  // search tree nodes visited
};

/// Order of the colour-preserving automorphism group, computed along a
/// stabilizer chain (orbit sizes of the base points).  Throws
/// BudgetExceeded after `node_budget` search nodes.
AutSearchResult automorphism_group(const ColoredGraph& g, std::uint64_t node_budget = 10'000'000);

/// Every colour-preserving isomorphism a -> b, sorted.  Throws
/// BudgetExceeded after `node_budget` nodes or more than `max_results`
/// isomorphisms.
std::vector<Permutation> all_isomorphisms(const ColoredGraph& a, const ColoredGraph& b,
                                          std::uint64_t node_budget = 10'000'000,
                                          std::uint64_t max_results = 1'000'000);

/// Colour-preserving and edge-preserving bijection a -> b.
bool is_isomorphism(const ColoredGraph& a, const ColoredGraph& b, const Permutation& p);

}  // namespace fgeom
