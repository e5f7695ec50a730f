#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/params.hpp"

namespace iasi {

/// Outcome of a sparing-number computation. The non-mono witness is an
/// independent set; the mono edges are exactly the edges it leaves with two
/// mono endpoints.
struct SparingResult {
  std::size_t value = 0;
  std::vector<VertexId> witness_nonmono;
  std::vector<Edge> witness_mono_edges;
  bool exact = false;
  std::uint64_t explored = 0;
};

inline constexpr std::size_t kBruteforceCap = 20;

/// Sparing number phi(g): the minimum, over independent sets I, of the number
/// of edges induced on V \ I. Solved as a maximum-weight independent set with
/// vertex weight = degree (edges touching I are never mono). The witness is
/// the lexicographically first optimal I in vertex-id order. Throws
/// CapExceeded above `exact_cap` vertices (use sparing_heuristic there).
SparingResult sparing_exact(const Graph& g, std::size_t exact_cap = kDefaultExactCap);

/// Exhaustive reference: every vertex subset, filtered to independent sets.
/// Same tie-break as sparing_exact. Throws CapExceeded above 20 vertices.
SparingResult sparing_bruteforce(const Graph& g);

/// Upper bound from greedy construction plus add / swap local search;
/// bipartite graphs get a colour class directly (value 0). exact = false.
SparingResult sparing_heuristic(const Graph& g);

/// Minimum mono edges of `counted` over non-mono sets that must be
/// independent in `constraint` (same vertices, constraint a supergraph of
/// counted). With constraint == counted this is sparing_exact.
SparingResult constrained_sparing(const Graph& counted, const Graph& constraint,
                                  std::size_t exact_cap = kDefaultExactCap);

struct MonoVertexMinimum {
  std::size_t min_mono_vertices = 0;       // = vertex cover number
  std::size_t max_nonmono_vertices = 0;    // = independence number
  std::vector<VertexId> nonmono_witness;   // a maximum independent set
};

/// Fewest mono-indexed vertices over all weak labelings. Throws CapExceeded.
MonoVertexMinimum mono_vertex_minimum(const Graph& g,
                                      std::size_t exact_cap = kDefaultExactCap);

/// Edges of g with neither endpoint in `nonmono`.
std::vector<Edge> mono_edges(const Graph& g, const std::vector<VertexId>& nonmono);

}  // namespace iasi
