#include "iasi/labeling.hpp"

#include <algorithm>
#include <stdexcept>

#include "iasi/error.hpp"
#include "iasi/params.hpp"

namespace iasi {

SetLabeling::SetLabeling(std::vector<IntSet> labels) {
  labels_.reserve(labels.size());
  for (auto& s : labels) labels_.emplace_back(std::move(s));
}

const IntSet& SetLabeling::at(VertexId v) const {
  if (!has(v)) {
    throw InvalidInput("vertex " + std::to_string(v + 1) + " has no set-label");
  }
  return *labels_[v];
}

void SetLabeling::set(VertexId v, IntSet s) {
  if (v >= labels_.size()) labels_.resize(v + 1);
  labels_[v] = std::move(s);
}

std::string_view to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::duplicate_vertex_label: return "duplicate_vertex_label";
    case Violation::Kind::duplicate_edge_label: return "duplicate_edge_label";
    case Violation::Kind::weak: return "weak";
    case Violation::Kind::strong: return "strong";
  }
  return "unknown";
}

LabelingReport verify(const Graph& g, const SetLabeling& f) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!f.has(v)) {
      throw InvalidInput("missing set-label for vertex '" + g.name(v) + "'");
    }
  }
  LabelingReport r;
  bool vertex_injective = true;
  bool edge_injective = true;
  bool weak = true;
  bool strong = true;

  std::map<IntSet, VertexId> seen_vertex;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto& s = f.at(v);
    if (s.is_singleton()) ++r.mono_vertex_count;
    auto [it, fresh] = seen_vertex.emplace(s, v);
    if (!fresh) {
      vertex_injective = false;
      r.violations.push_back({Violation::Kind::duplicate_vertex_label, {it->second, v}, {}});
    }
  }

  std::map<IntSet, Edge> seen_edge;
  std::optional<std::size_t> common;
  bool uniform = true;
  for (const auto& e : g.edges()) {
    const auto& a = f.at(e.u);
    const auto& b = f.at(e.v);
    const IntSet s = sumset(a, b);
    if (a.is_singleton() && b.is_singleton()) ++r.mono_edge_count;
    if (s.size() != std::max(a.size(), b.size())) {
      weak = false;
      r.violations.push_back({Violation::Kind::weak, {}, {e}});
    }
    if (s.size() != a.size() * b.size()) {
      strong = false;
      r.violations.push_back({Violation::Kind::strong, {}, {e}});
    }
    if (!common) {
      common = s.size();
    } else if (*common != s.size()) {
      uniform = false;
    }
    auto [it, fresh] = seen_edge.emplace(s, e);
    if (!fresh) {
      edge_injective = false;
      r.violations.push_back({Violation::Kind::duplicate_edge_label, {}, {it->second, e}});
    }
  }
  r.is_iasi = vertex_injective && edge_injective;
  r.is_wiasi = r.is_iasi && weak;
  r.is_siasi = r.is_iasi && strong;
  if (common && uniform) r.uniformity = common;
  return r;
}

SetLabeling assign_labels(const Graph& g, std::span<const VertexId> nonmono,
                          const Cardinalities& cardinalities) {
  std::vector<char> is_nonmono(g.order(), 0);
  for (VertexId v : nonmono) {
    if (v >= g.order()) throw InvalidInput("non-mono vertex out of range");
    if (is_nonmono[v]) {
      throw InvalidInput("vertex '" + g.name(v) + "' listed twice as non-mono");
    }
    is_nonmono[v] = 1;
  }
  std::size_t max_card = 2;
  for (const auto& [v, c] : cardinalities) {
    if (v >= g.order() || !is_nonmono[v]) {
      throw InvalidInput("cardinality given for a vertex outside the non-mono set");
    }
    if (c < 2) {
      throw InvalidInput("non-mono vertex '" + g.name(v) +
                         "' needs cardinality >= 2, got " + std::to_string(c));
    }
    max_card = std::max(max_card, c);
  }

  const std::size_t mono_count = g.order() - nonmono.size();
  const auto singletons = mian_chowla(mono_count);
  const std::uint64_t largest = singletons.empty() ? 0 : singletons.back();
  const std::uint64_t stride = 2 * largest + max_card + 1;

  SetLabeling f(g.order());
  std::size_t next_single = 0;
  std::uint64_t next_block = 1;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (is_nonmono[v]) {
      auto it = cardinalities.find(v);
      const std::size_t c = it == cardinalities.end() ? 2 : it->second;
      f.set(v, IntSet::block(next_block++ * stride, c));
    } else {
      f.set(v, IntSet{singletons[next_single++]});
    }
  }
  return f;
}

SetLabeling construct_weak(const Graph& g, std::span<const VertexId> nonmono,
                           const Cardinalities& cardinalities) {
  std::vector<char> in(g.order(), 0);
  for (VertexId v : nonmono) {
    if (v < g.order()) in[v] = 1;
  }
  std::size_t expected_mono = 0;
  for (const auto& e : g.edges()) {
    if (in[e.u] && in[e.v]) {
      throw InvalidInput("non-mono set is not independent: edge " + edge_name(g, e));
    }
    if (!in[e.u] && !in[e.v]) ++expected_mono;
  }
  SetLabeling f = assign_labels(g, nonmono, cardinalities);
  const auto report = verify(g, f);
  if (!report.is_wiasi || report.mono_edge_count != expected_mono) {
    throw std::logic_error("construct_weak produced a labeling that does not verify");
  }
  return f;
}

SetLabeling construct_k_uniform(const Graph& g, std::size_t k) {
  if (k < 2) throw InvalidInput("k-uniform construction needs k >= 2");
  const auto bp = bipartition(g);
  if (!bp) {
    std::string cycle;
    for (VertexId v : find_odd_cycle(g)) cycle += " " + g.name(v);
    throw Unsupported("graph is not bipartite (odd cycle:" + cycle +
                      "); no weakly k-uniform IASI exists");
  }
  Cardinalities cards;
  for (VertexId v : bp->second) cards[v] = k;
  SetLabeling f = construct_weak(g, bp->second, cards);
  const auto report = verify(g, f);
  if (g.size() > 0 && report.uniformity != k) {
    throw std::logic_error("construct_k_uniform produced a non-uniform labeling");
  }
  return f;
}

SetLabeling restrict_labeling(const SetLabeling& f, const Graph& g, const Graph& h) {
  SetLabeling out(h.order());
  for (VertexId v = 0; v < h.order(); ++v) {
    out.set(v, f.at(g.require(h.name(v))));
  }
  return out;
}

SetLabeling transport(const SetLabeling& f, const Graph& g, const OpResult& op) {
  const auto& sources = op.provenance.sources;
  if (sources.size() != op.graph.order()) {
    throw InvalidInput("provenance does not cover every result vertex");
  }
  SetLabeling out(op.graph.order());
  for (VertexId v = 0; v < op.graph.order(); ++v) {
    const Source* found = nullptr;
    for (const auto& s : sources[v]) {
      if (s.operand != 0) continue;
      if (found) {
        throw InvalidInput("vertex '" + op.graph.name(v) +
                           "' has more than one source element");
      }
      found = &s;
    }
    if (!found) {
      throw InvalidInput("vertex '" + op.graph.name(v) +
                         "' has no source element in the labeled graph");
    }
    if (found->kind == Source::Kind::vertex) {
      if (found->vertex >= g.order()) throw InvalidInput("provenance refers to a missing vertex");
      out.set(v, f.at(found->vertex));
    } else {
      out.set(v, f.edge_label(found->edge));
    }
  }
  return out;
}

std::vector<VertexId> nonmono_vertices(const SetLabeling& f) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < f.order(); ++v) {
    if (f.has(v) && !f.at(v).is_singleton()) out.push_back(v);
  }
  return out;
}

}  // namespace iasi
