#include <gtest/gtest.h>

#include "iasi/error.hpp"
#include "iasi/families.hpp"
#include "iasi/mwis.hpp"
#include "iasi/ops.hpp"
#include "iasi/params.hpp"
#include "iasi/sparing.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using iasi::Family;
using iasi::Graph;

namespace {

void expect_consistent(const Graph& g, const iasi::SparingResult& r) {
  const auto& w = r.witness_nonmono;
  for (auto a : w)
    for (auto b : w) EXPECT_FALSE(a != b && g.adjacent(a, b)) << g.label();
  EXPECT_EQ(iasi::mono_edges(g, w), r.witness_mono_edges);
  EXPECT_EQ(r.witness_mono_edges.size(), r.value);
}

}  // namespace

TEST(Mwis, WeightedAgainstExhaustive) {
  for (const auto& c : corpus::random_cases()) {
    auto g = iasi::random_graph(c.n, c.p, c.seed);
    std::vector<long> weights;
    for (iasi::VertexId v = 0; v < g.order(); ++v) weights.push_back(static_cast<long>((v * 7 + c.seed) % 5 + 1));
    auto result = iasi::MaxWeightIndependentSet(iasi::adjacency_masks(g), weights).solve();
    long best = 0;
    const auto m = oracle::matrix(g);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
      if (!oracle::independent(m, s)) continue;
      long w = 0;
      for (std::size_t v = 0; v < g.order(); ++v)
        if (s >> v & 1) w += weights[v];
      best = std::max(best, w);
    }
    EXPECT_EQ(result.weight, best) << g.label();
    EXPECT_TRUE(oracle::independent(m, result.set));
  }
}

TEST(Mwis, CanonicalIsLexicographicallyFirst) {
  // C4 with unit weights: {v1, v3} and {v2, v4} tie; v1 must be taken.
  auto g = iasi::generate(Family::cycle, {4});
  auto r = iasi::MaxWeightIndependentSet(iasi::adjacency_masks(g), {1, 1, 1, 1}).canonical();
  EXPECT_EQ(r.set, iasi::bit(0) | iasi::bit(2));
}

TEST(Mwis, RejectsOversizeGraphs) {
  EXPECT_THROW(iasi::adjacency_masks(Graph(65)), iasi::CapExceeded);
}

TEST(Sparing, KnownValues) {
  EXPECT_EQ(iasi::sparing_exact(iasi::generate(Family::complete, {6})).value, 10u);
  EXPECT_EQ(iasi::sparing_exact(iasi::generate(Family::cycle, {7})).value, 1u);
  EXPECT_EQ(iasi::sparing_exact(iasi::generate(Family::cycle, {8})).value, 0u);
  EXPECT_EQ(iasi::sparing_exact(iasi::generate(Family::wheel, {4})).value, 2u);
  EXPECT_EQ(iasi::sparing_exact(iasi::generate(Family::gear, {7})).value, 0u);
  EXPECT_EQ(iasi::sparing_exact(Graph(3)).value, 0u);
}

TEST(Sparing, ExactMatchesOracleOnCatalog) {
  for (const auto& g : corpus::catalog(13)) {
    auto r = iasi::sparing_exact(g);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, oracle::sparing(g)) << g.label();
    expect_consistent(g, r);
  }
}

TEST(Sparing, BruteforceSharesTieBreak) {
  for (const auto& c : corpus::random_cases()) {
    auto g = iasi::random_graph(c.n, c.p, c.seed);
    auto exact = iasi::sparing_exact(g);
    auto brute = iasi::sparing_bruteforce(g);
    EXPECT_EQ(exact.value, oracle::sparing(g)) << g.label();
    EXPECT_EQ(exact.value, brute.value) << g.label();
    EXPECT_EQ(exact.witness_nonmono, brute.witness_nonmono) << g.label();
  }
}

TEST(Sparing, HeuristicIsAnUpperBound) {
  for (const auto& g : corpus::catalog(12)) {
    auto h = iasi::sparing_heuristic(g);
    EXPECT_FALSE(h.exact);
    EXPECT_GE(h.value, iasi::sparing_exact(g).value) << g.label();
    expect_consistent(g, h);
    if (iasi::is_bipartite(g)) EXPECT_EQ(h.value, 0u) << g.label();
  }
}

TEST(Sparing, Caps) {
  auto big = iasi::generate(Family::cycle, {31});
  EXPECT_THROW(iasi::sparing_exact(big, 30), iasi::CapExceeded);
  EXPECT_NO_THROW(iasi::sparing_exact(big, 31));
  EXPECT_THROW(iasi::sparing_bruteforce(iasi::generate(Family::cycle, {21})), iasi::CapExceeded);
  EXPECT_EQ(iasi::sparing_heuristic(iasi::generate(Family::cycle, {101})).value, 1u);
}

TEST(Sparing, ConstrainedAgainstComplete) {
  // Non-mono set independent in K_n means at most one non-mono vertex.
  auto g = iasi::generate(Family::cycle, {5});
  auto kn = iasi::generate(Family::complete, {5});
  auto r = iasi::constrained_sparing(g, kn);
  EXPECT_EQ(r.value, 3u);
  EXPECT_LE(r.witness_nonmono.size(), 1u);
  EXPECT_EQ(iasi::constrained_sparing(g, g).value, iasi::sparing_exact(g).value);
}

TEST(Sparing, MonoVertexMinimumIsCoverNumber) {
  for (const auto& g : corpus::catalog(11)) {
    auto m = iasi::mono_vertex_minimum(g);
    EXPECT_EQ(m.min_mono_vertices, oracle::vertex_cover_number(g)) << g.label();
    EXPECT_EQ(m.max_nonmono_vertices + m.min_mono_vertices, g.order());
    EXPECT_EQ(m.nonmono_witness.size(), m.max_nonmono_vertices);
  }
}
