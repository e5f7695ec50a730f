#include "iasi/mwis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "iasi/error.hpp"

namespace iasi {

std::vector<VertexMask> adjacency_masks(const Graph& g) {
  if (g.order() > kMaxMaskOrder) {
    throw CapExceeded("order " + std::to_string(g.order()) +
                      " exceeds the 64-vertex limit of exact search");
  }
  std::vector<VertexMask> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

struct MaxWeightIndependentSet::Search {
  const MaxWeightIndependentSet& p;
  long best = -1;
  VertexMask best_set = 0;
  long stop_at = std::numeric_limits<long>::max();
  bool done = false;
  std::uint64_t nodes = 0;

  void run(VertexMask cand, long cur, VertexMask set) {
    ++nodes;
    if (cur > best) {
      best = cur;
      best_set = set;
      if (best >= stop_at) {
        done = true;
        return;
      }
    }
    if (cand == 0) return;
    if (cur + p.bound(cand) <= best) return;
    const VertexId v = p.pick(cand);
    run(cand & ~p.adj_[v] & ~bit(v), cur + p.weight_[v], set | bit(v));
    if (done) return;
    run(cand & ~bit(v), cur, set);
  }
};

MaxWeightIndependentSet::MaxWeightIndependentSet(std::vector<VertexMask> adjacency,
                                                 std::vector<long> weights)
    : adj_(std::move(adjacency)), weight_(std::move(weights)) {
  if (adj_.size() != weight_.size()) {
    throw InvalidInput("weights and adjacency differ in size");
  }
  if (adj_.size() > kMaxMaskOrder) {
    throw CapExceeded("exact search supports at most 64 vertices");
  }
  order_.resize(adj_.size());
  std::iota(order_.begin(), order_.end(), VertexId{0});
  std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
    if (weight_[a] != weight_[b]) return weight_[a] > weight_[b];
    return std::popcount(adj_[a]) > std::popcount(adj_[b]);
  });
  for (VertexId v = 0; v < adj_.size(); ++v) all_ |= bit(v);
}

long MaxWeightIndependentSet::bound(VertexMask cand) const {
  // Greedy clique cover in descending weight order; an independent set takes
  // at most one vertex per clique, and each clique's first member is its
  // heaviest.
  VertexMask cliques[kMaxMaskOrder];
  std::size_t count = 0;
  long total = 0;
  for (VertexId v : order_) {
    if (!(cand & bit(v))) continue;
    bool placed = false;
    for (std::size_t c = 0; c < count; ++c) {
      if ((cliques[c] & ~adj_[v]) == 0) {
        cliques[c] |= bit(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      cliques[count++] = bit(v);
      total += weight_[v];
    }
  }
  return total;
}

VertexId MaxWeightIndependentSet::pick(VertexMask cand) const {
  for (VertexId v : order_) {
    if (cand & bit(v)) return v;
  }
  return 0;
}

MaxWeightIndependentSet::Result MaxWeightIndependentSet::solve() const {
  Search s{*this};
  s.run(all_, 0, 0);
  return {s.best, s.best_set, s.nodes};
}

MaxWeightIndependentSet::Result MaxWeightIndependentSet::canonical() const {
  const Result opt = solve();
  std::uint64_t nodes = opt.nodes;

  VertexMask fixed = 0;
  VertexMask allowed = all_;
  long fixed_weight = 0;
  for (VertexId v = 0; v < adj_.size(); ++v) {
    if (!(allowed & bit(v))) continue;
    const VertexMask rest = allowed & ~adj_[v] & ~bit(v);
    const long need = opt.weight - fixed_weight - weight_[v];
    Search s{*this};
    s.stop_at = need;
    s.best = std::numeric_limits<long>::min() / 2;
    if (need <= 0) {
      s.best = 0;  // empty completion suffices
    } else {
      s.best = need - 1;
      s.run(rest, 0, 0);
    }
    nodes += s.nodes;
    if (s.best >= need) {
      fixed |= bit(v);
      fixed_weight += weight_[v];
      allowed = rest;
    } else {
      allowed &= ~bit(v);
    }
  }
  return {fixed_weight, fixed, nodes};
}

}  // namespace iasi
