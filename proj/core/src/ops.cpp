#include "iasi/ops.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "iasi/error.hpp"

namespace iasi {

namespace {

std::string operand_label(const Graph& g, const char* fallback) {
  return g.label().empty() ? std::string(fallback) : g.label();
}

std::string call(const std::string& op, const std::vector<std::string>& args) {
  std::string s = op + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    s += args[i];
  }
  return s + ")";
}

Provenance unary(const std::string& op, const Graph& g) {
  return {op, {operand_label(g, "G")}, {}};
}

Provenance binary(const std::string& op, const Graph& g1, const Graph& g2) {
  return {op, {operand_label(g1, "G1"), operand_label(g2, "G2")}, {}};
}

std::vector<std::vector<Source>> identity_sources(const Graph& g) {
  std::vector<std::vector<Source>> s;
  s.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) s.push_back({Source::of_vertex(0, v)});
  return s;
}

bool names_disjoint(const Graph& g1, const Graph& g2) {
  std::unordered_set<std::string_view> names(g1.names().begin(),
                                             g1.names().end());
  return std::none_of(g2.names().begin(), g2.names().end(),
                      [&](const std::string& n) { return names.contains(n); });
}

}  // namespace

Graph rename(const Graph& g, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(g.order());
  for (const auto& n : g.names()) names.push_back(prefix + n);
  return Graph(std::move(names), {g.edges().begin(), g.edges().end()},
               g.label());
}

OpResult graph_union(const Graph& g1, const Graph& g2) {
  Provenance prov = binary("union", g1, g2);
  std::vector<std::string> names = g1.names();
  prov.sources = identity_sources(g1);

  std::vector<VertexId> map2(g2.order());
  for (VertexId v = 0; v < g2.order(); ++v) {
    if (auto shared = g1.find(g2.name(v))) {
      map2[v] = *shared;
      prov.sources[*shared].push_back(Source::of_vertex(1, v));
    } else {
      map2[v] = static_cast<VertexId>(names.size());
      names.push_back(g2.name(v));
      prov.sources.push_back({Source::of_vertex(1, v)});
    }
  }
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const auto& e : g2.edges()) edges.emplace_back(map2[e.u], map2[e.v]);

  Graph g(std::move(names), std::move(edges),
          call("union", prov.operands));
  return {std::move(g), std::move(prov)};
}

OpResult graph_intersection(const Graph& g1, const Graph& g2) {
  Provenance prov = binary("intersection", g1, g2);
  std::vector<std::string> names;
  std::vector<VertexId> from1;
  std::vector<std::int64_t> index1(g1.order(), -1);
  for (VertexId v = 0; v < g1.order(); ++v) {
    if (auto w = g2.find(g1.name(v))) {
      index1[v] = static_cast<std::int64_t>(names.size());
      names.push_back(g1.name(v));
      prov.sources.push_back({Source::of_vertex(0, v), Source::of_vertex(1, *w)});
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g1.edges()) {
    if (index1[e.u] < 0 || index1[e.v] < 0) continue;
    const auto a = *g2.find(g1.name(e.u));
    const auto b = *g2.find(g1.name(e.v));
    if (g2.adjacent(a, b)) {
      edges.emplace_back(static_cast<VertexId>(index1[e.u]),
                         static_cast<VertexId>(index1[e.v]));
    }
  }
  Graph g(std::move(names), std::move(edges),
          call("intersection", prov.operands));
  return {std::move(g), std::move(prov)};
}

OpResult disjoint_union(const Graph& g1, const Graph& g2) {
  OpResult r = graph_union(rename(g1, "g1:"), rename(g2, "g2:"));
  r.provenance.op = "disjoint_union";
  r.provenance.operands = {operand_label(g1, "G1"), operand_label(g2, "G2")};
  r.graph = r.graph.with_label(call("dunion", r.provenance.operands));
  return r;
}

OpResult join(const Graph& g1, const Graph& g2) {
  Provenance prov = binary("join", g1, g2);
  const bool keep = names_disjoint(g1, g2);
  std::vector<std::string> names;
  names.reserve(g1.order() + g2.order());
  for (const auto& n : g1.names()) names.push_back(keep ? n : "g1:" + n);
  for (const auto& n : g2.names()) names.push_back(keep ? n : "g2:" + n);

  const auto off = static_cast<VertexId>(g1.order());
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const auto& e : g2.edges()) edges.emplace_back(e.u + off, e.v + off);
  for (VertexId a = 0; a < g1.order(); ++a) {
    for (VertexId b = 0; b < g2.order(); ++b) edges.emplace_back(a, b + off);
  }
  for (VertexId v = 0; v < g1.order(); ++v) prov.sources.push_back({Source::of_vertex(0, v)});
  for (VertexId v = 0; v < g2.order(); ++v) prov.sources.push_back({Source::of_vertex(1, v)});

  Graph g(std::move(names), std::move(edges), call("join", prov.operands));
  return {std::move(g), std::move(prov)};
}

OpResult cartesian_product(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty()) {
    throw InvalidInput("cartesian product needs non-empty operands");
  }
  Provenance prov = binary("cartesian", g1, g2);
  const auto n2 = static_cast<VertexId>(g2.order());
  auto at = [n2](VertexId a, VertexId b) { return a * n2 + b; };

  std::vector<std::string> names;
  for (VertexId a = 0; a < g1.order(); ++a) {
    for (VertexId b = 0; b < n2; ++b) {
      names.push_back("(" + g1.name(a) + "," + g2.name(b) + ")");
      prov.sources.push_back({Source::of_vertex(0, a), Source::of_vertex(1, b)});
    }
  }
  std::vector<Edge> edges;
  for (VertexId a = 0; a < g1.order(); ++a) {
    for (const auto& e : g2.edges()) edges.emplace_back(at(a, e.u), at(a, e.v));
  }
  for (VertexId b = 0; b < n2; ++b) {
    for (const auto& e : g1.edges()) edges.emplace_back(at(e.u, b), at(e.v, b));
  }
  Graph g(std::move(names), std::move(edges), call("cartesian", prov.operands));
  return {std::move(g), std::move(prov)};
}

OpResult corona(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty()) {
    throw InvalidInput("corona needs non-empty operands");
  }
  Provenance prov = binary("corona", g1, g2);
  std::vector<std::string> names = g1.names();
  prov.sources = identity_sources(g1);
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());

  for (VertexId i = 0; i < g1.order(); ++i) {
    const auto base = static_cast<VertexId>(names.size());
    const std::string prefix = "copy_" + std::to_string(i + 1) + ":";
    for (VertexId v = 0; v < g2.order(); ++v) {
      names.push_back(prefix + g2.name(v));
      prov.sources.push_back({Source::of_vertex(1, v)});
      edges.emplace_back(i, base + v);
    }
    for (const auto& e : g2.edges()) edges.emplace_back(base + e.u, base + e.v);
  }
  Graph g(std::move(names), std::move(edges), call("corona", prov.operands));
  return {std::move(g), std::move(prov)};
}

OpResult complement(const Graph& g) {
  Provenance prov = unary("complement", g);
  prov.sources = identity_sources(g);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
    }
  }
  Graph out(g.names(), std::move(edges), call("complement", prov.operands));
  return {std::move(out), std::move(prov)};
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g,
                                                       VertexId source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

OpResult power(const Graph& g, long r) {
  if (r < 1) throw InvalidInput("power exponent must be >= 1");
  Provenance prov = unary("power", g);
  prov.sources = identity_sources(g);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < g.order(); ++a) {
    const auto dist = distances_from(g, a);
    for (VertexId b = a + 1; b < g.order(); ++b) {
      if (dist[b] && *dist[b] <= static_cast<std::size_t>(r)) edges.emplace_back(a, b);
    }
  }
  Graph out(g.names(), std::move(edges),
            call("power", {operand_label(g, "G"), std::to_string(r)}));
  return {std::move(out), std::move(prov)};
}

OpResult complete_subdivision(const Graph& g) {
  Provenance prov = unary("complete_subdivision", g);
  prov.sources = identity_sources(g);
  std::vector<std::string> names = g.names();
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const auto w = static_cast<VertexId>(names.size());
    names.push_back("sub:" + edge_name(g, e));
    prov.sources.push_back({Source::of_edge(0, e)});
    edges.emplace_back(e.u, w);
    edges.emplace_back(e.v, w);
  }
  Graph out(std::move(names), std::move(edges), call("subdivide", prov.operands));
  return {std::move(out), std::move(prov)};
}

OpResult super_subdivision(const Graph& g, long m) {
  if (m < 1) throw InvalidInput("super subdivision needs m >= 1");
  Provenance prov = unary("super_subdivision", g);
  prov.sources = identity_sources(g);
  std::vector<std::string> names = g.names();
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    for (long j = 1; j <= m; ++j) {
      const auto w = static_cast<VertexId>(names.size());
      names.push_back("sub:" + edge_name(g, e) + "#" + std::to_string(j));
      prov.sources.push_back({Source::of_edge(0, e)});
      edges.emplace_back(e.u, w);
      edges.emplace_back(e.v, w);
    }
  }
  Graph out(std::move(names), std::move(edges),
            call("super_subdivide", {operand_label(g, "G"), std::to_string(m)}));
  return {std::move(out), std::move(prov)};
}

OpResult line_graph(const Graph& g) {
  Provenance prov = unary("line_graph", g);
  const auto edges_in = g.edges();
  std::vector<std::string> names;
  for (const auto& e : edges_in) {
    names.push_back(edge_name(g, e));
    prov.sources.push_back({Source::of_edge(0, e)});
  }
  std::vector<Edge> edges;
  for (VertexId i = 0; i < edges_in.size(); ++i) {
    for (VertexId j = i + 1; j < edges_in.size(); ++j) {
      const auto& a = edges_in[i];
      const auto& b = edges_in[j];
      if (a.has(b.u) || a.has(b.v)) edges.emplace_back(i, j);
    }
  }
  Graph out(std::move(names), std::move(edges), call("line", prov.operands));
  return {std::move(out), std::move(prov)};
}

OpResult total_graph(const Graph& g) {
  Provenance prov = unary("total_graph", g);
  prov.sources = identity_sources(g);
  std::vector<std::string> names = g.names();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const auto edges_in = g.edges();
  const auto off = static_cast<VertexId>(g.order());
  for (VertexId i = 0; i < edges_in.size(); ++i) {
    const auto& e = edges_in[i];
    names.push_back(edge_name(g, e));
    prov.sources.push_back({Source::of_edge(0, e)});
    edges.emplace_back(e.u, off + i);
    edges.emplace_back(e.v, off + i);
    for (VertexId j = i + 1; j < edges_in.size(); ++j) {
      const auto& f = edges_in[j];
      if (e.has(f.u) || e.has(f.v)) edges.emplace_back(off + i, off + j);
    }
  }
  Graph out(std::move(names), std::move(edges), call("total", prov.operands));
  return {std::move(out), std::move(prov)};
}

OpResult contract_edge(const Graph& g, Edge e) {
  if (e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw InvalidInput("cannot contract a non-edge");
  }
  Provenance prov = unary("contract_edge", g);
  std::vector<std::int64_t> index(g.order());
  std::vector<std::string> names;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (v == e.v) continue;
    index[v] = static_cast<std::int64_t>(names.size());
    if (v == e.u) {
      names.push_back(g.name(e.u) + "/" + g.name(e.v));
      prov.sources.push_back({Source::of_vertex(0, e.u), Source::of_vertex(0, e.v)});
    } else {
      names.push_back(g.name(v));
      prov.sources.push_back({Source::of_vertex(0, v)});
    }
  }
  index[e.v] = index[e.u];
  std::vector<Edge> edges;
  for (const auto& f : g.edges()) {
    const auto a = static_cast<VertexId>(index[f.u]);
    const auto b = static_cast<VertexId>(index[f.v]);
    if (a != b) edges.emplace_back(a, b);  // loop from e itself dropped
  }
  Graph out(std::move(names), std::move(edges),
            call("contract", {operand_label(g, "G"), edge_name(g, e)}));
  return {std::move(out), std::move(prov)};
}

OpResult smooth_degree2(const Graph& g, VertexId v) {
  if (v >= g.order()) throw InvalidInput("smoothing: no such vertex");
  if (g.degree(v) != 2) {
    throw InvalidInput("smoothing: vertex '" + g.name(v) + "' has degree " +
                       std::to_string(g.degree(v)) + ", expected 2");
  }
  const VertexId u = g.neighbors(v)[0];
  const VertexId w = g.neighbors(v)[1];
  if (g.adjacent(u, w)) {
    throw InvalidInput("smoothing: vertex '" + g.name(v) +
                       "' lies in a triangle");
  }
  Provenance prov = unary("smooth", g);
  std::vector<VertexId> keep;
  for (VertexId x = 0; x < g.order(); ++x) {
    if (x != v) {
      keep.push_back(x);
      prov.sources.push_back({Source::of_vertex(0, x)});
    }
  }
  Graph h = g.induced(keep);
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  auto shift = [v](VertexId x) { return x > v ? x - 1 : x; };
  edges.emplace_back(shift(u), shift(w));
  Graph out = Graph(h.names(), std::move(edges),
                    call("smooth", {operand_label(g, "G"), g.name(v)}));
  return {std::move(out), std::move(prov)};
}

bool is_complete(const Graph& g) {
  const auto n = g.order();
  return g.size() == n * (n - (n ? 1 : 0)) / 2;
}

}  // namespace iasi
