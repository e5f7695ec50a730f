#include "iasi/params.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>

#include "iasi/error.hpp"
#include "iasi/mwis.hpp"
#include "iasi/ops.hpp"

namespace iasi {

namespace {

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap || g.order() > kMaxMaskOrder) {
    throw CapExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                      " exceeds exact cap " +
                      std::to_string(std::min(cap, kMaxMaskOrder)));
  }
}

std::vector<VertexId> to_list(VertexMask m) {
  std::vector<VertexId> out;
  while (m) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  Bipartition bp;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    (side[v] == 0 ? bp.first : bp.second).push_back(v);
  }
  return bp;
}

std::vector<VertexId> find_odd_cycle(const Graph& g) {
  const auto n = g.order();
  std::vector<int> side(n, -1);
  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::size_t> depth(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          // Both ends climb to their lowest common ancestor; equal sides
          // mean equal depth parity, so the cycle is odd.
          std::vector<VertexId> left{v}, right{w};
          VertexId a = v, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              left.push_back(a = static_cast<VertexId>(parent[a]));
            } else {
              right.push_back(b = static_cast<VertexId>(parent[b]));
            }
          }
          std::vector<VertexId> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end() - 1);
          return cycle;
        }
      }
    }
  }
  return {};
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

bool is_eulerian(const Graph& g) {
  if (g.size() == 0) return false;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2) return false;
  }
  const VertexId start = g.edges().front().u;
  const auto dist = distances_from(g, start);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0 && !dist[v]) return false;
  }
  return true;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    for (const auto& d : distances_from(g, v)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

std::vector<Edge> maximum_matching(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::int64_t> match(n, -1), parent(n, -1), base(n);
  std::vector<char> used(n), blossom(n);
  std::deque<std::int64_t> queue;

  auto lca = [&](std::int64_t a, std::int64_t b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](std::int64_t v, std::int64_t b, std::int64_t child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](std::int64_t root) -> std::int64_t {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    queue.assign(1, root);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (VertexId uw : g.neighbors(static_cast<VertexId>(v))) {
        const auto to = static_cast<std::int64_t>(uw);
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          const auto cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::int64_t i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  for (std::int64_t v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    auto end = find_path(v);
    while (end != -1) {
      const auto pv = parent[end];
      const auto ppv = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = ppv;
    }
  }
  std::vector<Edge> out;
  for (std::int64_t v = 0; v < n; ++v) {
    if (match[v] > v) out.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(match[v]));
  }
  return out;
}

std::vector<VertexId> minimum_vertex_cover(const Graph& g, std::size_t exact_cap) {
  check_cap(g, exact_cap, "vertex cover");
  const auto adj = adjacency_masks(g);
  VertexMask best = 0;
  std::size_t best_size = g.order() + 1;

  // alive: vertices not yet decided.
  std::function<void(VertexMask, VertexMask, std::size_t)> branch =
      [&](VertexMask alive, VertexMask cover, std::size_t taken) {
        std::size_t edges2 = 0;
        int maxdeg = 0;
        VertexId pick = 0;
        for (VertexMask m = alive; m; m &= m - 1) {
          const auto v = static_cast<VertexId>(std::countr_zero(m));
          const int d = std::popcount(adj[v] & alive);
          edges2 += static_cast<std::size_t>(d);
          if (d > maxdeg) {
            maxdeg = d;
            pick = v;
          }
        }
        if (maxdeg == 0) {
          if (taken < best_size) {
            best_size = taken;
            best = cover;
          }
          return;
        }
        const std::size_t edges = edges2 / 2;
        const std::size_t lower = (edges + static_cast<std::size_t>(maxdeg) - 1) /
                                  static_cast<std::size_t>(maxdeg);
        if (taken + lower >= best_size) return;
        branch(alive & ~bit(pick), cover | bit(pick), taken + 1);
        const VertexMask nb = adj[pick] & alive;
        branch(alive & ~nb & ~bit(pick), cover | nb,
               taken + static_cast<std::size_t>(std::popcount(nb)));
      };
  VertexMask all = 0;
  for (VertexId v = 0; v < g.order(); ++v) all |= bit(v);
  branch(all, 0, 0);
  return to_list(best);
}

std::vector<VertexId> maximum_independent_set(const Graph& g, std::size_t exact_cap) {
  check_cap(g, exact_cap, "independence number");
  MaxWeightIndependentSet engine(adjacency_masks(g),
                                 std::vector<long>(g.order(), 1));
  return to_list(engine.solve().set);
}

bool is_colorable(const Graph& g, std::size_t k) {
  const auto n = g.order();
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  std::vector<std::int64_t> color(n, -1);
  std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i,
                                                            std::size_t used) {
    if (i == n) return true;
    const VertexId v = order[i];
    const std::size_t limit = std::min(k, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (VertexId w : g.neighbors(v)) {
        if (color[w] == static_cast<std::int64_t>(c)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = static_cast<std::int64_t>(c);
      if (place(i + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return place(0, 0);
}

std::size_t chromatic_number(const Graph& g, std::size_t exact_cap) {
  check_cap(g, exact_cap, "chromatic number");
  if (g.order() == 0) return 0;
  if (g.size() == 0) return 1;
  // Clique number (independence number of the complement) is a lower bound.
  const Graph co = complement(g).graph;
  MaxWeightIndependentSet clique(adjacency_masks(co), std::vector<long>(g.order(), 1));
  auto k = static_cast<std::size_t>(clique.solve().weight);
  while (!is_colorable(g, k)) ++k;
  return k;
}

GraphParams parameters(const Graph& g, std::size_t exact_cap) {
  if (g.empty()) throw InvalidInput("parameters of the empty graph are undefined");
  GraphParams p;
  p.order = g.order();
  p.size = g.size();
  p.min_degree = g.min_degree();
  p.max_degree = g.max_degree();
  p.matching_number = matching_number(g);
  p.connected = is_connected(g);
  p.diameter = diameter(g);
  p.is_bipartite = is_bipartite(g);
  p.is_eulerian = is_eulerian(g);
  p.has_isolated_vertices = g.has_isolated_vertices();
  if (g.order() <= exact_cap && g.order() <= kMaxMaskOrder) {
    p.vertex_cover_number = minimum_vertex_cover(g, exact_cap).size();
    p.independence_number = maximum_independent_set(g, exact_cap).size();
    p.chromatic_number = chromatic_number(g, exact_cap);
  }
  return p;
}

std::optional<CycleDecomposition> odd_cycle_decomposition(const Graph& g) {
  if (!is_eulerian(g)) return std::nullopt;
  const auto n = g.order();
  std::vector<std::vector<char>> used(n);
  for (VertexId v = 0; v < n; ++v) used[v].assign(g.degree(v), 0);
  auto mark = [&](VertexId a, VertexId b) {
    const auto na = g.neighbors(a);
    const auto nb = g.neighbors(b);
    used[a][std::lower_bound(na.begin(), na.end(), b) - na.begin()] = 1;
    used[b][std::lower_bound(nb.begin(), nb.end(), a) - nb.begin()] = 1;
  };
  auto next_edge = [&](VertexId v) -> std::optional<VertexId> {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!used[v][i]) return nb[i];
    }
    return std::nullopt;
  };

  CycleDecomposition out;
  std::vector<std::int64_t> pos(n, -1);
  for (VertexId start = 0; start < n; ++start) {
    while (next_edge(start)) {
      std::vector<VertexId> trail{start};
      pos[start] = 0;
      while (!trail.empty()) {
        const VertexId v = trail.back();
        const auto w = next_edge(v);
        if (!w) {
          pos[v] = -1;
          trail.pop_back();
          continue;
        }
        mark(v, *w);
        if (pos[*w] >= 0) {
          const auto at = static_cast<std::size_t>(pos[*w]);
          std::vector<VertexId> cycle(trail.begin() + static_cast<std::ptrdiff_t>(at),
                                      trail.end());
          for (std::size_t i = at + 1; i < trail.size(); ++i) pos[trail[i]] = -1;
          trail.resize(at + 1);
          if (cycle.size() % 2) ++out.odd_count;
          out.cycles.push_back(std::move(cycle));
        } else {
          pos[*w] = static_cast<std::int64_t>(trail.size());
          trail.push_back(*w);
        }
      }
    }
  }
  return out;
}

}  // namespace iasi
