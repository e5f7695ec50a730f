#include "iasi/sparing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "iasi/error.hpp"
#include "iasi/mwis.hpp"

namespace iasi {

namespace {

std::vector<VertexId> to_list(VertexMask m) {
  std::vector<VertexId> out;
  while (m) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

void check_cap(const Graph& g, std::size_t cap) {
  const auto limit = std::min(cap, kMaxMaskOrder);
  if (g.order() > limit) {
    throw CapExceeded("order " + std::to_string(g.order()) +
                      " exceeds the exact cap " + std::to_string(limit) +
                      "; use the heuristic solver (--heuristic) for an upper bound");
  }
}

SparingResult finish(const Graph& g, std::vector<VertexId> nonmono, bool exact,
                     std::uint64_t explored) {
  SparingResult r;
  r.witness_mono_edges = mono_edges(g, nonmono);
  r.value = r.witness_mono_edges.size();
  r.witness_nonmono = std::move(nonmono);
  r.exact = exact;
  r.explored = explored;
  return r;
}

}  // namespace

std::vector<Edge> mono_edges(const Graph& g, const std::vector<VertexId>& nonmono) {
  std::vector<char> in(g.order(), 0);
  for (VertexId v : nonmono) in[v] = 1;
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) out.push_back(e);
  }
  return out;
}

SparingResult constrained_sparing(const Graph& counted, const Graph& constraint,
                                  std::size_t exact_cap) {
  if (counted.order() != constraint.order()) {
    throw InvalidInput("counted and constraint graphs differ in order");
  }
  check_cap(counted, exact_cap);
  std::vector<long> weight(counted.order());
  for (VertexId v = 0; v < counted.order(); ++v) {
    weight[v] = static_cast<long>(counted.degree(v));
  }
  MaxWeightIndependentSet engine(adjacency_masks(constraint), std::move(weight));
  const auto best = engine.canonical();
  return finish(counted, to_list(best.set), true, best.nodes);
}

SparingResult sparing_exact(const Graph& g, std::size_t exact_cap) {
  return constrained_sparing(g, g, exact_cap);
}

SparingResult sparing_bruteforce(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kBruteforceCap) {
    throw CapExceeded("brute force is limited to " + std::to_string(kBruteforceCap) +
                      " vertices");
  }
  const auto edges = g.edges();
  std::uint64_t best_mask = 0;
  std::size_t best = edges.size() + 1;
  std::uint64_t explored = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ++explored;
    std::size_t mono = 0;
    bool independent = true;
    for (const auto& e : edges) {
      const bool a = (mask >> e.u) & 1;
      const bool b = (mask >> e.v) & 1;
      if (a && b) {
        independent = false;
        break;
      }
      if (!a && !b) ++mono;
    }
    if (!independent) continue;
    bool better = mono < best;
    if (mono == best) {
      // Prefer the set containing the lowest vertex where the two differ.
      const std::uint64_t diff = mask ^ best_mask;
      better = diff != 0 && (mask & (diff & (~diff + 1))) != 0;
    }
    if (better) {
      best = mono;
      best_mask = mask;
    }
  }
  std::vector<VertexId> nonmono;
  for (VertexId v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1) nonmono.push_back(v);
  }
  return finish(g, std::move(nonmono), true, explored);
}

namespace {

class LocalSearch {
 public:
  explicit LocalSearch(const Graph& g) : g_(g), in_(g.order(), 0), hits_(g.order(), 0) {}

  void add(VertexId v) {
    in_[v] = 1;
    for (VertexId w : g_.neighbors(v)) ++hits_[w];
  }
  void drop(VertexId v) {
    in_[v] = 0;
    for (VertexId w : g_.neighbors(v)) --hits_[w];
  }

  void greedy(const std::vector<VertexId>& order) {
    for (VertexId v : order) {
      if (!in_[v] && hits_[v] == 0) add(v);
    }
  }

  /// One improving move, if any. Moves: add a free vertex; swap one member
  /// for a heavier vertex it alone blocks; swap one member for two
  /// non-adjacent vertices it alone blocks.
  bool improve() {
    const auto n = static_cast<VertexId>(g_.order());
    for (VertexId v = 0; v < n; ++v) {
      if (!in_[v] && hits_[v] == 0) {
        add(v);
        return true;
      }
    }
    for (VertexId u = 0; u < n; ++u) {
      if (!in_[u]) continue;
      std::vector<VertexId> blocked;
      for (VertexId v : g_.neighbors(u)) {
        if (!in_[v] && hits_[v] == 1) blocked.push_back(v);
      }
      for (VertexId v : blocked) {
        if (g_.degree(v) > g_.degree(u)) {
          drop(u);
          add(v);
          return true;
        }
      }
      for (std::size_t i = 0; i < blocked.size(); ++i) {
        for (std::size_t j = i + 1; j < blocked.size(); ++j) {
          const VertexId a = blocked[i], b = blocked[j];
          if (!g_.adjacent(a, b) && g_.degree(a) + g_.degree(b) > g_.degree(u)) {
            drop(u);
            add(a);
            add(b);
            return true;
          }
        }
      }
    }
    return false;
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (in_[v]) out.push_back(v);
    }
    return out;
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (in_[v]) w += g_.degree(v);
    }
    return w;
  }

 private:
  const Graph& g_;
  std::vector<char> in_;
  std::vector<std::size_t> hits_;  // members adjacent to each vertex
};

}  // namespace

SparingResult sparing_heuristic(const Graph& g) {
  if (auto bp = bipartition(g)) return finish(g, bp->second, false, 0);

  std::vector<VertexId> by_id(g.order());
  std::iota(by_id.begin(), by_id.end(), VertexId{0});
  std::vector<VertexId> by_degree = by_id;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

  std::vector<VertexId> best;
  std::size_t best_weight = 0;
  std::uint64_t moves = 0;
  bool first = true;
  for (const auto* order : {&by_degree, &by_id}) {
    LocalSearch ls(g);
    ls.greedy(*order);
    while (ls.improve()) ++moves;
    if (first || ls.weight() > best_weight) {
      best_weight = ls.weight();
      best = ls.members();
      first = false;
    }
  }
  return finish(g, std::move(best), false, moves);
}

MonoVertexMinimum mono_vertex_minimum(const Graph& g, std::size_t exact_cap) {
  check_cap(g, exact_cap);
  MaxWeightIndependentSet engine(adjacency_masks(g), std::vector<long>(g.order(), 1));
  const auto best = engine.canonical();
  MonoVertexMinimum r;
  r.max_nonmono_vertices = static_cast<std::size_t>(best.weight);
  r.min_mono_vertices = g.order() - r.max_nonmono_vertices;
  r.nonmono_witness = to_list(best.set);
  return r;
}

}  // namespace iasi
