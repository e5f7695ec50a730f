#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

/// Where a result vertex came from: a vertex or an edge of one operand.
struct Source {
  enum class Kind { vertex, edge };

  std::size_t operand = 0;
  Kind kind = Kind::vertex;
  VertexId vertex = 0;
  Edge edge{};

  static Source of_vertex(std::size_t operand, VertexId v) {
    return {operand, Kind::vertex, v, {}};
  }
  static Source of_edge(std::size_t operand, Edge e) {
    return {operand, Kind::edge, 0, e};
  }

  friend bool operator==(const Source&, const Source&) = default;
};

struct Provenance {
  std::string op;
  std::vector<std::string> operands;       // operand labels
  std::vector<std::vector<Source>> sources;  // per result vertex
};

/// A graph produced by an operation, with every result vertex traceable to
/// its operand element(s).
struct OpResult {
  Graph graph;
  Provenance provenance;
};

/// Non-disjoint union: vertices with equal names are identified.
OpResult graph_union(const Graph& g1, const Graph& g2);
/// Vertices and edges common to both (by name).
OpResult graph_intersection(const Graph& g1, const Graph& g2);
/// Union after prefixing names with "g1:" / "g2:".
OpResult disjoint_union(const Graph& g1, const Graph& g2);
/// Prefixes every vertex name.
Graph rename(const Graph& g, const std::string& prefix);

/// G1 + G2. Names are kept when the operands' names are disjoint, otherwise
/// prefixed with "g1:" / "g2:".
OpResult join(const Graph& g1, const Graph& g2);
/// Vertex (u, v) at index u * |V2| + v, named "(u,v)".
OpResult cartesian_product(const Graph& g1, const Graph& g2);
/// G1 vertices keep their names; copy i of G2 is named "copy_<i>:<v>".
OpResult corona(const Graph& g1, const Graph& g2);
OpResult complement(const Graph& g);
/// Throws InvalidInput if r < 1.
OpResult power(const Graph& g, long r);
/// New vertex "sub:u-v" per edge.
OpResult complete_subdivision(const Graph& g);
/// Each edge uv replaced by K_{2,m}; new vertices "sub:u-v#j".
OpResult super_subdivision(const Graph& g, long m);
/// Vertex "u-v" per edge of g.
OpResult line_graph(const Graph& g);
/// Original vertices followed by one vertex "u-v" per edge.
OpResult total_graph(const Graph& g);
/// Merges e.v into e.u; the merged vertex is named "u/v".
OpResult contract_edge(const Graph& g, Edge e);
/// Removes v (degree 2, neighbors non-adjacent) and joins its neighbors.
OpResult smooth_degree2(const Graph& g, VertexId v);

/// BFS distances from `source`; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g,
                                                       VertexId source);

bool is_complete(const Graph& g);

}  // namespace iasi
