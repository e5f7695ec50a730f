#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/intset.hpp"
#include "iasi/ops.hpp"

namespace iasi {

/// Vertex -> IntSet assignment for one graph; edge labels are derived as
/// sumsets on demand. May be partial while being built.
class SetLabeling {
 public:
  SetLabeling() = default;
  explicit SetLabeling(std::size_t order) : labels_(order) {}
  explicit SetLabeling(std::vector<IntSet> labels);

  std::size_t order() const { return labels_.size(); }
  bool has(VertexId v) const { return v < labels_.size() && labels_[v].has_value(); }
  /// Throws InvalidInput if v is unlabeled.
  const IntSet& at(VertexId v) const;
  void set(VertexId v, IntSet s);

  IntSet edge_label(const Edge& e) const { return sumset(at(e.u), at(e.v)); }

  friend bool operator==(const SetLabeling&, const SetLabeling&) = default;

 private:
  std::vector<std::optional<IntSet>> labels_;
};

struct Violation {
  enum class Kind {
    duplicate_vertex_label,  // two vertices share a set-label
    duplicate_edge_label,    // two edges share a sumset
    weak,                    // |f+(uv)| != max(|f(u)|, |f(v)|)
    strong,                  // |f+(uv)| != |f(u)| |f(v)|
  };
  Kind kind;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
};

std::string_view to_string(Violation::Kind k);

struct LabelingReport {
  bool is_iasi = false;
  bool is_wiasi = false;
  bool is_siasi = false;
  std::size_t mono_vertex_count = 0;
  std::size_t mono_edge_count = 0;
  /// k when every edge label has cardinality k; empty if none or mixed.
  std::optional<std::size_t> uniformity;
  std::vector<Violation> violations;
};

/// Checks vertex and edge-label injectivity (IASI), the weak and strong
/// cardinality conditions on every edge, and uniformity. Every failing
/// element is reported. Throws InvalidInput naming an unlabeled vertex.
LabelingReport verify(const Graph& g, const SetLabeling& f);

using Cardinalities = std::map<VertexId, std::size_t>;

/// Labels without checking independence: vertices outside `nonmono` get
/// distinct Mian-Chowla singletons; the j-th non-mono vertex gets the block
/// {jM, ..., jM + c - 1} with stride M > 2 * (largest singleton) + (largest
/// cardinality). Cardinalities default to 2 and must be >= 2.
SetLabeling assign_labels(const Graph& g, std::span<const VertexId> nonmono,
                          const Cardinalities& cardinalities = {});

/// assign_labels() for an independent `nonmono`, re-verified: the result is a
/// WIASI whose mono edges are exactly the edges inside V \ nonmono. Throws
/// InvalidInput with the offending edge when `nonmono` is not independent.
SetLabeling construct_weak(const Graph& g, std::span<const VertexId> nonmono,
                           const Cardinalities& cardinalities = {});

/// Weakly k-uniform labeling of a bipartite graph (k >= 2). Throws
/// Unsupported with an odd-cycle witness when g is not bipartite.
SetLabeling construct_k_uniform(const Graph& g, std::size_t k);

/// Restriction of f (a labeling of g) to the subgraph h, matched by name.
SetLabeling restrict_labeling(const SetLabeling& f, const Graph& g, const Graph& h);

/// Induced labeling along provenance: result vertices sourced from a vertex
/// of g keep its label, those sourced from an edge get that edge's sumset.
/// Throws InvalidInput when a result vertex has no (or an ambiguous) source
/// in g.
SetLabeling transport(const SetLabeling& f, const Graph& g, const OpResult& op);

/// Vertices whose label has cardinality > 1.
std::vector<VertexId> nonmono_vertices(const SetLabeling& f);

}  // namespace iasi
