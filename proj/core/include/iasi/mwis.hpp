#pragma once

#include <cstdint>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxMaskOrder = 64;

inline VertexMask bit(VertexId v) { return VertexMask{1} << v; }

/// Adjacency rows as bitmasks. Throws CapExceeded above 64 vertices.
std::vector<VertexMask> adjacency_masks(const Graph& g);

/// Exact maximum-weight independent set on at most 64 vertices.
///
/// Branch and bound over vertex inclusion; vertices are branched in
/// descending weight (then degree) order and subtrees are cut with a greedy
/// weighted clique-cover bound. canonical() returns, among all optimal sets,
/// the one whose characteristic vector is lexicographically first in
/// vertex-id order (lower ids included whenever an optimum allows it).
class MaxWeightIndependentSet {
 public:
  struct Result {
    long weight = 0;
    VertexMask set = 0;
    std::uint64_t nodes = 0;
  };

  MaxWeightIndependentSet(std::vector<VertexMask> adjacency,
                          std::vector<long> weights);

  Result solve() const;
  Result canonical() const;

 private:
  struct Search;

  long bound(VertexMask cand) const;
  VertexId pick(VertexMask cand) const;

  std::vector<VertexMask> adj_;
  std::vector<long> weight_;
  std::vector<VertexId> order_;
  VertexMask all_ = 0;
};

}  // namespace iasi
