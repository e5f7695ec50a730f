#pragma once

// Reference implementations used only by the tests. Everything here is
// plain exhaustive search over an adjacency matrix so that it shares no code
// with the library routines it checks.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "iasi/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const iasi::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  return m;
}

inline bool independent(const Matrix& m, std::uint64_t set) {
  const auto n = m.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!(set >> a & 1)) continue;
    for (std::size_t b = a + 1; b < n; ++b)
      if ((set >> b & 1) && m[a][b]) return false;
  }
  return true;
}

inline std::size_t edges_outside(const Matrix& m, std::uint64_t set) {
  std::size_t count = 0;
  const auto n = m.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (m[a][b] && !(set >> a & 1) && !(set >> b & 1)) ++count;
  return count;
}

/// Minimum number of edges left with two mono endpoints over all
/// independent non-mono sets.
inline std::size_t sparing(const iasi::Graph& g) {
  const auto m = matrix(g);
  std::size_t best = g.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
    if (independent(m, s)) best = std::min(best, edges_outside(m, s));
  return best;
}

inline std::size_t independence_number(const iasi::Graph& g) {
  const auto m = matrix(g);
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
    if (independent(m, s)) best = std::max<std::size_t>(best, __builtin_popcountll(s));
  return best;
}

inline std::size_t vertex_cover_number(const iasi::Graph& g) {
  const auto m = matrix(g);
  const auto n = g.order();
  std::size_t best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool covers = true;
    for (std::size_t a = 0; a < n && covers; ++a)
      for (std::size_t b = a + 1; b < n && covers; ++b)
        if (m[a][b] && !(s >> a & 1) && !(s >> b & 1)) covers = false;
    if (covers) best = std::min<std::size_t>(best, __builtin_popcountll(s));
  }
  return best;
}

/// Largest set of pairwise disjoint edges, by recursion over the edge list.
inline std::size_t matching_number(const iasi::Graph& g) {
  std::vector<iasi::Edge> edges(g.edges().begin(), g.edges().end());
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used, std::size_t taken) -> void {
    best = std::max(best, taken);
    if (taken + (edges.size() - i) <= best) return;
    for (std::size_t k = i; k < edges.size(); ++k) {
      const auto e = edges[k];
      if ((used >> e.u & 1) || (used >> e.v & 1)) continue;
      self(self, k + 1, used | (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v), taken + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

/// Smallest k admitting a proper colouring, by trying every assignment.
inline std::size_t chromatic_number(const iasi::Graph& g) {
  const auto n = g.order();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> colour(n, 0);
    auto rec = [&](auto&& self, std::size_t v) -> bool {
      if (v == n) return true;
      for (std::size_t c = 0; c < k; ++c) {
        bool ok = true;
        for (auto w : g.neighbors(static_cast<iasi::VertexId>(v)))
          if (w < v && colour[w] == c) ok = false;
        if (!ok) continue;
        colour[v] = c;
        if (self(self, v + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0)) return k;
  }
  return n;
}

/// Fewest edges whose removal leaves a bipartite graph, over every edge
/// subset.
inline std::size_t bipartization_number(const iasi::Graph& g) {
  const auto n = g.order();
  std::size_t best = g.size();
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
    std::size_t inside = 0;
    for (const auto& e : g.edges())
      if ((side >> e.u & 1) == (side >> e.v & 1)) ++inside;
    best = std::min(best, inside);
  }
  return best;
}

inline bool is_sidon(const std::vector<std::uint64_t>& xs) {
  std::set<std::uint64_t> sums;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j)
      if (!sums.insert(xs[i] + xs[j]).second) return false;
  return true;
}

inline std::set<std::uint64_t> sumset(const std::set<std::uint64_t>& a,
                                      const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(x + y);
  return out;
}

}  // namespace oracle
