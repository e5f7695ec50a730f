#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace iasi {

using VertexId = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph. Vertices are 0..order()-1 and each
/// carries a unique display name; names are how vertices are identified
/// across graph operations and files. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Graph on `order` vertices named v1..vn.
  explicit Graph(std::size_t order, std::vector<Edge> edges = {},
                 std::string label = {});

  /// Throws InvalidInput on self-loops, out-of-range endpoints, empty or
  /// duplicate names. Repeated edges are merged.
  Graph(std::vector<std::string> names, std::vector<Edge> edges,
        std::string label = {});

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return names_.empty(); }

  /// Sorted edge list.
  std::span<const Edge> edges() const { return edges_; }
  /// Sorted neighbor list.
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  bool adjacent(VertexId a, VertexId b) const;
  bool has_isolated_vertices() const;

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// find() that throws InvalidInput naming the missing vertex.
  VertexId require(std::string_view name) const;

  /// Free-form family/expression description, e.g. "wheel(5)".
  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  /// Subgraph induced on `keep` (in the given order); names preserved.
  Graph induced(std::span<const VertexId> keep) const;
  /// Same vertices, edge set replaced.
  Graph with_edges(std::vector<Edge> edges) const;

  static std::string default_name(VertexId v) {
    return "v" + std::to_string(v + 1);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::string label_;
};

std::string edge_name(const Graph& g, const Edge& e);

}  // namespace iasi
