#include <gtest/gtest.h>

#include <algorithm>

#include "iasi/error.hpp"
#include "iasi/families.hpp"
#include "iasi/ops.hpp"
#include "iasi/params.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using iasi::Family;
using iasi::Graph;

namespace {

Graph petersen() {
  std::vector<iasi::Edge> e;
  for (iasi::VertexId i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, e, "petersen");
}

bool is_cover(const Graph& g, const std::vector<iasi::VertexId>& c) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const iasi::Edge& e) {
    return std::find(c.begin(), c.end(), e.u) != c.end() || std::find(c.begin(), c.end(), e.v) != c.end();
  });
}

bool is_independent(const Graph& g, const std::vector<iasi::VertexId>& s) {
  for (auto a : s)
    for (auto b : s)
      if (a != b && g.adjacent(a, b)) return false;
  return true;
}

}  // namespace

TEST(Params, Bipartition) {
  auto bp = iasi::bipartition(iasi::generate(Family::cycle, {6}));
  ASSERT_TRUE(bp);
  EXPECT_EQ(bp->first, (std::vector<iasi::VertexId>{0, 2, 4}));
  EXPECT_FALSE(iasi::bipartition(iasi::generate(Family::cycle, {5})));
}

TEST(Params, OddCycleWitness) {
  auto g = iasi::generate(Family::wheel, {6});
  auto cyc = iasi::find_odd_cycle(g);
  ASSERT_EQ(cyc.size() % 2, 1u);
  for (std::size_t i = 0; i < cyc.size(); ++i) EXPECT_TRUE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
  EXPECT_TRUE(iasi::find_odd_cycle(iasi::generate(Family::gear, {5})).empty());
}

TEST(Params, ConnectivityAndDiameter) {
  EXPECT_EQ(iasi::diameter(iasi::generate(Family::path, {6})), 5u);
  EXPECT_EQ(iasi::diameter(petersen()), 2u);
  auto split = iasi::disjoint_union(iasi::generate(Family::path, {2}), iasi::generate(Family::path, {2}));
  EXPECT_FALSE(iasi::is_connected(split.graph));
  EXPECT_FALSE(iasi::diameter(split.graph));
}

TEST(Params, Eulerian) {
  EXPECT_TRUE(iasi::is_eulerian(iasi::generate(Family::cycle, {5})));
  EXPECT_TRUE(iasi::is_eulerian(iasi::generate(Family::windmill, {3, 3})));
  EXPECT_FALSE(iasi::is_eulerian(iasi::generate(Family::wheel, {4})));
  EXPECT_FALSE(iasi::is_eulerian(Graph(3)));
}

TEST(Params, MatchingAgainstExhaustive) {
  for (const auto& g : corpus::catalog(10)) {
    auto m = iasi::maximum_matching(g);
    EXPECT_EQ(m.size(), oracle::matching_number(g)) << g.label();
    std::vector<bool> used(g.order(), false);
    for (const auto& e : m) {
      EXPECT_TRUE(g.adjacent(e.u, e.v));
      EXPECT_FALSE(used[e.u] || used[e.v]);
      used[e.u] = used[e.v] = true;
    }
  }
  EXPECT_EQ(iasi::matching_number(petersen()), 5u);
}

TEST(Params, MatchingOnRandomGraphs) {
  for (const auto& c : corpus::random_cases()) {
    auto g = iasi::random_graph(c.n, c.p, c.seed);
    EXPECT_EQ(iasi::matching_number(g), oracle::matching_number(g)) << g.label();
  }
}

TEST(Params, VertexCoverAndIndependenceAgainstExhaustive) {
  for (const auto& g : corpus::catalog(12)) {
    auto cover = iasi::minimum_vertex_cover(g);
    auto indep = iasi::maximum_independent_set(g);
    EXPECT_TRUE(is_cover(g, cover)) << g.label();
    EXPECT_TRUE(is_independent(g, indep)) << g.label();
    EXPECT_EQ(cover.size(), oracle::vertex_cover_number(g)) << g.label();
    EXPECT_EQ(indep.size(), oracle::independence_number(g)) << g.label();
  }
}

TEST(Params, ChromaticAgainstExhaustive) {
  for (const auto& g : corpus::catalog(9)) EXPECT_EQ(iasi::chromatic_number(g), oracle::chromatic_number(g)) << g.label();
  EXPECT_EQ(iasi::chromatic_number(petersen()), 3u);
  EXPECT_TRUE(iasi::is_colorable(petersen(), 3));
  EXPECT_FALSE(iasi::is_colorable(petersen(), 2));
}

TEST(Params, ExactCap) {
  auto g = iasi::generate(Family::cycle, {40});
  EXPECT_THROW(iasi::minimum_vertex_cover(g, 30), iasi::CapExceeded);
  EXPECT_THROW(iasi::chromatic_number(g, 30), iasi::CapExceeded);
  auto p = iasi::parameters(g, 30);
  EXPECT_EQ(p.matching_number, 20u);
  EXPECT_FALSE(p.vertex_cover_number);
  EXPECT_FALSE(p.chromatic_number);
  EXPECT_EQ(p.diameter, 20u);
}

TEST(Params, Summary) {
  auto p = iasi::parameters(petersen());
  EXPECT_EQ(p.order, 10u);
  EXPECT_EQ(p.size, 15u);
  EXPECT_EQ(p.min_degree, 3u);
  EXPECT_EQ(p.max_degree, 3u);
  EXPECT_EQ(p.independence_number, 4u);
  EXPECT_EQ(p.vertex_cover_number, 6u);
  EXPECT_EQ(p.chromatic_number, 3u);
  EXPECT_TRUE(p.connected);
  EXPECT_FALSE(p.is_bipartite);
  EXPECT_FALSE(p.is_eulerian);
  EXPECT_THROW(iasi::parameters(Graph()), iasi::InvalidInput);
}

TEST(Params, CycleDecomposition) {
  auto d = iasi::odd_cycle_decomposition(iasi::generate(Family::windmill, {3, 4}));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->cycles.size(), 4u);
  EXPECT_EQ(d->odd_count, 4u);
  std::size_t covered = 0;
  for (const auto& c : d->cycles) covered += c.size();
  EXPECT_EQ(covered, 12u);
  EXPECT_FALSE(iasi::odd_cycle_decomposition(iasi::generate(Family::path, {3})));
}

TEST(Params, CycleDecompositionCoversEveryEdgeOnce) {
  for (const auto& g : corpus::catalog(12)) {
    auto d = iasi::odd_cycle_decomposition(g);
    if (!iasi::is_eulerian(g)) {
      EXPECT_FALSE(d) << g.label();
      continue;
    }
    ASSERT_TRUE(d) << g.label();
    std::vector<iasi::Edge> seen;
    std::size_t odd = 0;
    for (const auto& c : d->cycles) {
      ASSERT_GE(c.size(), 3u);
      odd += c.size() % 2;
      for (std::size_t i = 0; i < c.size(); ++i) seen.emplace_back(c[i], c[(i + 1) % c.size()]);
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_TRUE(std::equal(seen.begin(), seen.end(), g.edges().begin(), g.edges().end())) << g.label();
    EXPECT_EQ(odd, d->odd_count);
  }
}
