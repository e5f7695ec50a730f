#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "iasi/graph.hpp"
#include "iasi/ops.hpp"

namespace iasi {

/// Result of a graph expression. `provenance` is set when the outermost term
/// is an operation.
struct Built {
  Graph graph;
  std::optional<Provenance> provenance;
};

struct ExprContext {
  std::uint64_t seed = 0;             // default seed for gnp(n, p)
  std::filesystem::path base_dir{};   // relative load("...") paths
};

/// Evaluates a graph expression:
///
///   expr   := name '(' args ')' | family ':' int (',' int)* | K<n> | C<n> | P<n>
///   args   := arg (',' arg)*       arg := expr | number | "string"
///
/// Families take their integer parameters (wheel(5), windmill:3,2). Operations:
/// union, dunion, intersection, join, cartesian (alias product), corona,
/// complement, power(g, r), subdivide, super_subdivide(g, m), line, total,
/// contract(g, "u", "v"), smooth(g, "v"), rename(g, "prefix"),
/// named(g, "a,b,..."), load("file"), gnp(n, p[, seed]).
/// Throws InvalidInput with the offending position.
Built build_expression(std::string_view text, const ExprContext& ctx = {});

inline Graph parse_graph_expression(std::string_view text, const ExprContext& ctx = {}) {
  return build_expression(text, ctx).graph;
}

}  // namespace iasi
