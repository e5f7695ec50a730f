#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

inline constexpr std::size_t kDefaultExactCap = 30;

/// Classical parameters. Fields that need exponential search are empty when
/// the order exceeds the exact cap; nothing here is approximated.
struct GraphParams {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t matching_number = 0;
  std::optional<std::size_t> vertex_cover_number;
  std::optional<std::size_t> independence_number;
  std::optional<std::size_t> chromatic_number;
  /// Empty for disconnected graphs.
  std::optional<std::size_t> diameter;
  bool connected = false;
  bool is_bipartite = false;
  bool is_eulerian = false;
  bool has_isolated_vertices = false;
};

/// Throws InvalidInput for the empty graph.
GraphParams parameters(const Graph& g, std::size_t exact_cap = kDefaultExactCap);

struct Bipartition {
  std::vector<VertexId> first;   // sides holding each component's smallest id
  std::vector<VertexId> second;
};

std::optional<Bipartition> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Vertex sequence of an odd cycle (closing edge implied), empty if bipartite.
std::vector<VertexId> find_odd_cycle(const Graph& g);

bool is_connected(const Graph& g);
/// At least one edge, all degrees even, and all edges in one component.
bool is_eulerian(const Graph& g);
std::optional<std::size_t> diameter(const Graph& g);

/// Maximum matching (Edmonds' blossom algorithm).
std::vector<Edge> maximum_matching(const Graph& g);
inline std::size_t matching_number(const Graph& g) {
  return maximum_matching(g).size();
}

/// Exact minimum vertex cover by branching on a maximum-degree vertex
/// (take it, or take its whole neighborhood). Throws CapExceeded.
std::vector<VertexId> minimum_vertex_cover(const Graph& g,
                                           std::size_t exact_cap = kDefaultExactCap);
/// Exact maximum independent set (branch and bound). Throws CapExceeded.
std::vector<VertexId> maximum_independent_set(const Graph& g,
                                              std::size_t exact_cap = kDefaultExactCap);
std::size_t chromatic_number(const Graph& g, std::size_t exact_cap = kDefaultExactCap);
/// True if g has a proper colouring with at most k colours.
bool is_colorable(const Graph& g, std::size_t k);

struct CycleDecomposition {
  std::vector<std::vector<VertexId>> cycles;
  std::size_t odd_count = 0;
};

/// Edge-disjoint cycle decomposition of an Eulerian graph, found by a walk
/// that always takes the smallest-id unused edge and splits off a cycle each
/// time it revisits a vertex on the current trail. Empty if not Eulerian.
std::optional<CycleDecomposition> odd_cycle_decomposition(const Graph& g);

}  // namespace iasi
