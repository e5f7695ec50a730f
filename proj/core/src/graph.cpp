#include "iasi/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "iasi/error.hpp"

namespace iasi {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(Graph::default_name(static_cast<VertexId>(i)));
  }
  return names;
}

}  // namespace

Graph::Graph(std::size_t order, std::vector<Edge> edges, std::string label)
    : Graph(default_names(order), std::move(edges), std::move(label)) {}

Graph::Graph(std::vector<std::string> names, std::vector<Edge> edges,
             std::string label)
    : names_(std::move(names)), edges_(std::move(edges)),
      label_(std::move(label)) {
  build();
}

void Graph::build() {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidInput("vertex name must not be empty");
    if (!seen.insert(n).second) {
      throw InvalidInput("duplicate vertex name '" + n + "'");
    }
  }
  const auto n = static_cast<VertexId>(names_.size());
  for (const auto& e : edges_) {
    if (e.u == e.v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (e.v >= n) {
      throw InvalidInput("edge endpoint " + std::to_string(e.v + 1) +
                         " is not a vertex (order " + std::to_string(n) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adj_.assign(names_.size(), {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t d = adj_.front().size();
  for (const auto& row : adj_) d = std::min(d, row.size());
  return d;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  const auto& row = adj_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

bool Graph::has_isolated_vertices() const {
  return std::any_of(adj_.begin(), adj_.end(),
                     [](const auto& row) { return row.empty(); });
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

VertexId Graph::require(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InvalidInput("no vertex named '" + std::string(name) + "'");
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<std::int64_t> index(order(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    index[keep[i]] = static_cast<std::int64_t>(i);
    names.push_back(names_[keep[i]]);
  }
  std::vector<Edge> edges;
  for (const auto& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.emplace_back(static_cast<VertexId>(index[e.u]),
                         static_cast<VertexId>(index[e.v]));
    }
  }
  return Graph(std::move(names), std::move(edges));
}

Graph Graph::with_edges(std::vector<Edge> edges) const {
  return Graph(names_, std::move(edges), label_);
}

std::string edge_name(const Graph& g, const Edge& e) {
  return g.name(e.u) + "-" + g.name(e.v);
}

}  // namespace iasi
