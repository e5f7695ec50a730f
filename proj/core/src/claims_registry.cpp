// The claim registry: every formula, bound and admissibility statement that
// the catalog checks, each paired with an oracle computed from scratch.

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "iasi/claims.hpp"
#include "iasi/error.hpp"
#include "iasi/expr.hpp"
#include "iasi/labeling.hpp"
#include "iasi/mwis.hpp"
#include "iasi/ops.hpp"
#include "iasi/params.hpp"
#include "iasi/rational.hpp"
#include "iasi/sparing.hpp"

namespace iasi {
namespace {

using Run = std::function<void(const ParamPoint&, const EvalContext&, ClaimReport&)>;
using GraphRun = std::function<void(const Graph&, const ParamPoint&, const EvalContext&, ClaimReport&)>;
using PairRun = std::function<void(const Graph&, const Graph&, const ParamPoint&, const EvalContext&,
                                   ClaimReport&)>;

// ---------------------------------------------------------------- helpers

long P(const ParamPoint& p, std::string_view name) {
  for (const auto& [k, v] : p)
    if (k == name) return v;
  throw InvalidInput("missing parameter '" + std::string(name) + "'");
}

Axis range(std::string name, long lo, long hi) {
  Axis a{std::move(name), {}};
  for (long v = lo; v <= hi; ++v) a.values.push_back(v);
  return a;
}

Graph build(const std::string& expr) { return parse_graph_expression(expr); }

std::string call(std::string_view f, std::initializer_list<long> args) {
  std::string out(f);
  out += '(';
  bool first = true;
  for (long a : args) {
    out += (first ? "" : ", ") + std::to_string(a);
    first = false;
  }
  return out + ")";
}

std::string set_str(const Graph& g, std::span<const VertexId> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + g.name(vs[i]);
  return out + "}";
}

std::string nonmono_str(const Graph& g, const SparingResult& s) {
  return "non-mono " + set_str(g, s.witness_nonmono);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void exact(ClaimReport& r, Rational formula, long oracle) {
  r.formula_value = formula.str();
  r.oracle_value = std::to_string(oracle);
  if (!formula.is_integer())
    r.status = ClaimStatus::non_integer;
  else
    r.status = formula == Rational(oracle) ? ClaimStatus::match : ClaimStatus::mismatch;
}

void lower(ClaimReport& r, Rational bound, long oracle) {
  r.formula_value = ">= " + bound.str();
  r.oracle_value = std::to_string(oracle);
  r.status = bound <= Rational(oracle) ? ClaimStatus::match : ClaimStatus::mismatch;
}

void predicate(ClaimReport& r, bool claimed, bool observed) {
  r.formula_value = bool_str(claimed);
  r.oracle_value = bool_str(observed);
  r.status = claimed == observed ? ClaimStatus::match : ClaimStatus::mismatch;
}

void unsupported(ClaimReport& r, std::string why) {
  r.status = ClaimStatus::unsupported;
  r.note = std::move(why);
}

long C2(long n) { return n * (n - 1) / 2; }

SparingResult phi(const Graph& g, const EvalContext& ctx) { return sparing_exact(g, ctx.exact_cap); }

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> v(g.order());
  std::iota(v.begin(), v.end(), VertexId{0});
  return v;
}

std::size_t degree_sum(const Graph& g, std::span<const VertexId> vs) {
  std::size_t s = 0;
  for (auto v : vs) s += g.degree(v);
  return s;
}

std::size_t triangles_at(const Graph& g, VertexId v) {
  std::size_t t = 0;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.adjacent(nb[i], nb[j])) ++t;
  return t;
}

void require_cap(const Graph& g, std::size_t cap, std::size_t hard, std::string_view what) {
  if (g.order() > std::min(cap, hard))
    throw CapExceeded(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds the cap " +
                      std::to_string(std::min(cap, hard)));
}

/// Maximum cut by enumerating the 2^(n-1) bipartitions (vertex 0 fixed on
/// side 0); also reports whether some maximum cut is a complete bipartite
/// spanning subgraph.
struct MaxCut {
  std::size_t edges = 0;
  VertexMask side{};
  bool some_complete = false;
};

MaxCut max_cut(const Graph& g, const EvalContext& ctx) {
  require_cap(g, ctx.exact_cap, 24, "maximum cut");
  MaxCut best;
  const auto n = g.order();
  if (n == 0) return best;
  const VertexMask limit = VertexMask{1} << (n - 1);
  for (VertexMask half = 0; half < limit; ++half) {
    const VertexMask s = half << 1;
    std::size_t cut = 0;
    for (const auto& e : g.edges())
      if (((s >> e.u) ^ (s >> e.v)) & 1) ++cut;
    const auto a = static_cast<std::size_t>(std::popcount(s));
    const bool complete = cut == a * (n - a);
    if (cut > best.edges) {
      best = {cut, s, complete};
    } else if (cut == best.edges && complete && !best.some_complete) {
      best.side = s;
      best.some_complete = true;
    }
  }
  return best;
}

/// Largest |C1| + |C2| over proper chi-colourings: the largest vertex set
/// inducing a bipartite graph whose complement is (chi - 2)-colourable.
std::size_t two_largest_classes(const Graph& g, std::size_t chi) {
  const auto n = g.order();
  if (chi <= 2) return n;
  std::size_t best = 0;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    std::vector<VertexId> in, out;
    for (VertexId v = 0; v < n; ++v) ((s >> v) & 1 ? in : out).push_back(v);
    if (!is_bipartite(g.induced(in))) continue;
    if (!is_colorable(g.induced(out), chi - 2)) continue;
    best = size;
  }
  return best;
}

Graph complete_on(const Graph& g) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < g.order(); ++a)
    for (VertexId b = a + 1; b < g.order(); ++b) edges.emplace_back(a, b);
  return Graph(g.names(), std::move(edges));
}

/// Fewest mono edges in g over labelings that are weak for g and for its
/// complement simultaneously (the non-mono set is independent in K_n).
SparingResult concurrent_minimum(const Graph& g, const EvalContext& ctx) {
  return constrained_sparing(g, complete_on(g), ctx.exact_cap);
}

bool is_regular(const Graph& g) { return g.order() == 0 || g.min_degree() == g.max_degree(); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const auto n = a.order();
  std::vector<std::size_t> da, db;
  for (VertexId v = 0; v < n; ++v) da.push_back(a.degree(v)), db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<VertexId> map(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, VertexId v) -> bool {
    if (v == n) return true;
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      if (!ok) continue;
      used[w] = true;
      map[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Searches all vertex subsets I meeting every edge exactly once (one side of
/// a 2-colouring) for one whose k-uniform labeling verifies.
bool uniform_labeling_exists(const Graph& g, std::size_t k, const EvalContext& ctx) {
  require_cap(g, ctx.exact_cap, kBruteforceCap, "uniform labeling search");
  const auto n = g.order();
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    bool ok = true;
    for (const auto& e : g.edges())
      if ((((s >> e.u) ^ (s >> e.v)) & 1) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<VertexId> nonmono;
    Cardinalities cards;
    for (VertexId v = 0; v < n; ++v)
      if ((s >> v) & 1) nonmono.push_back(v), cards[v] = k;
    auto rep = verify(g, assign_labels(g, nonmono, cards));
    if (rep.is_wiasi && (g.size() == 0 || rep.uniformity == k)) return true;
  }
  return false;
}

bool all_mono(const SetLabeling& f) { return nonmono_vertices(f).empty(); }

std::string cycles_str(const Graph& g, const CycleDecomposition& d) {
  std::string out;
  for (const auto& c : d.cycles) {
    out += out.empty() ? "" : "; ";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + g.name(c[i]);
  }
  return "cycles " + out;
}

// ---------------------------------------------------------------- corpora

const std::vector<std::string> kCorpus = {
    "path(2)",      "path(5)",       "cycle(4)",       "cycle(5)",
    "cycle(6)",     "cycle(7)",      "complete(4)",    "complete(5)",
    "complete_bipartite(2, 3)",      "complete_bipartite(3, 3)",
    "wheel(4)",     "wheel(5)",      "fan(4)",         "gear(3)",
    "gear(4)",      "complete_sun(3)", "complete_split(3, 2)", "windmill(3, 2)",
    "double_wheel(3)", "m_wheel(3, 3)",
};

const std::vector<std::string> kBipartiteCorpus = {
    "path(2)", "path(5)", "cycle(4)", "cycle(6)", "complete_bipartite(2, 3)",
    "complete_bipartite(3, 3)", "gear(3)", "gear(4)",
};

const std::vector<std::string> kEulerian = {
    "cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)", "cycle(7)", "cycle(8)",
    "windmill(3, 2)", "windmill(3, 3)", "windmill(3, 4)", "complete(5)", "complete(7)",
    "complete_bipartite(2, 2)", "complete_bipartite(2, 4)", "complete_bipartite(4, 4)",
    "union(named(cycle(3), \"x,a1,a2\"), named(cycle(5), \"x,b1,b2,b3,b4\"))",
    "union(named(cycle(4), \"x,a1,a2,a3\"), named(cycle(4), \"x,b1,b2,b3\"))",
};

using Pair = std::pair<std::string, std::string>;

// ---------------------------------------------------------------- registry

class Registry {
 public:
  void add(std::string id, ClaimKind kind, std::string statement, std::vector<Axis> axes,
           std::function<bool(const ParamPoint&)> applicable, Run run) {
    claims_.push_back({std::move(id), kind, std::move(statement), std::move(axes), std::move(applicable),
                       std::move(run)});
  }

  /// One grid point per graph expression (axis "case"), optionally crossed
  /// with extra axes.
  void cases(std::string id, ClaimKind kind, std::string statement, std::vector<std::string> exprs,
             GraphRun run, std::vector<Axis> extra = {}) {
    std::vector<Axis> axes{range("case", 0, static_cast<long>(exprs.size()) - 1)};
    for (auto& a : extra) axes.push_back(std::move(a));
    const auto count = static_cast<long>(exprs.size());
    add(std::move(id), kind, std::move(statement), std::move(axes),
        [count](const ParamPoint& p) { return P(p, "case") >= 0 && P(p, "case") < count; },
        [exprs = std::move(exprs), run = std::move(run)](const ParamPoint& p, const EvalContext& ctx,
                                                         ClaimReport& r) {
          const auto& e = exprs[static_cast<std::size_t>(P(p, "case"))];
          r.graph = e;
          run(build(e), p, ctx, r);
        });
  }

  /// Like cases() over operand pairs; `op` names the combined graph.
  void pairs(std::string id, ClaimKind kind, std::string statement, std::string op, std::vector<Pair> operands,
             PairRun run, std::vector<Axis> extra = {}) {
    std::vector<Axis> axes{range("case", 0, static_cast<long>(operands.size()) - 1)};
    for (auto& a : extra) axes.push_back(std::move(a));
    const auto count = static_cast<long>(operands.size());
    add(std::move(id), kind, std::move(statement), std::move(axes),
        [count](const ParamPoint& p) { return P(p, "case") >= 0 && P(p, "case") < count; },
        [op = std::move(op), operands = std::move(operands), run = std::move(run)](
            const ParamPoint& p, const EvalContext& ctx, ClaimReport& r) {
          const auto& [a, b] = operands[static_cast<std::size_t>(P(p, "case"))];
          r.graph = op + "(" + a + ", " + b + ")";
          run(build(a), build(b), p, ctx, r);
        });
  }

  /// Exact formula over a family-parameter grid: `expr` builds the graph
  /// expression from the point, `formula` the claimed value of phi.
  void family(std::string id, std::string statement, std::vector<Axis> axes,
              std::function<bool(const ParamPoint&)> applicable,
              std::function<std::string(const ParamPoint&)> expr,
              std::function<Rational(const ParamPoint&)> formula) {
    add(std::move(id), ClaimKind::exact_formula, std::move(statement), std::move(axes), std::move(applicable),
        [expr = std::move(expr), formula = std::move(formula)](const ParamPoint& p, const EvalContext& ctx,
                                                               ClaimReport& r) {
          r.graph = expr(p);
          auto g = build(r.graph);
          auto s = phi(g, ctx);
          exact(r, formula(p), static_cast<long>(s.value));
          r.witness = nonmono_str(g, s);
        });
  }

  std::vector<Claim> take() { return std::move(claims_); }

 private:
  std::vector<Claim> claims_;
};

void basic_claims(Registry& reg) {
  reg.cases("SN-BIPARTITE", ClaimKind::exact_formula, "phi(G) = 0 for bipartite G",
            {"path(2)", "path(5)", "path(8)", "cycle(4)", "cycle(6)", "cycle(8)", "cycle(10)",
             "complete_bipartite(1, 3)", "complete_bipartite(2, 2)", "complete_bipartite(2, 3)",
             "complete_bipartite(3, 3)", "complete_bipartite(3, 4)", "gear(3)", "gear(4)", "gear(5)",
             "gear(6)", "subdivide(complete(4))", "super_subdivide(cycle(3), 2)"},
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto s = phi(g, ctx);
              exact(r, 0, static_cast<long>(s.value));
              r.witness = nonmono_str(g, s);
            });

  reg.family("SN-ODD-CYCLE", "phi(C_n) = 1 for odd n", {Axis{"n", {3, 5, 7, 9, 11}}},
             [](const ParamPoint& p) { return P(p, "n") >= 3 && P(p, "n") % 2 == 1; },
             [](const ParamPoint& p) { return call("cycle", {P(p, "n")}); },
             [](const ParamPoint&) { return Rational(1); });

  reg.add("CYCLE-PARITY", ClaimKind::parity,
          "every weak labeling of C_n has a number of mono edges congruent to n mod 2", {range("n", 3, 12)},
          [](const ParamPoint& p) { return P(p, "n") >= 3 && P(p, "n") <= 20; },
          [](const ParamPoint& p, const EvalContext&, ClaimReport& r) {
            const long n = P(p, "n");
            r.graph = call("cycle", {n});
            auto g = build(r.graph);
            // every independent non-mono set of the cycle
            bool seen[2] = {false, false};
            std::size_t sets = 0;
            for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
              bool independent = true;
              for (const auto& e : g.edges())
                if (((s >> e.u) & 1) && ((s >> e.v) & 1)) independent = false;
              if (!independent) continue;
              std::vector<VertexId> I;
              for (VertexId v = 0; v < n; ++v)
                if ((s >> v) & 1) I.push_back(v);
              seen[mono_edges(g, I).size() % 2] = true;
              ++sets;
            }
            r.formula_value = std::to_string(n % 2);
            r.oracle_value = seen[0] && seen[1] ? "mixed" : seen[1] ? "1" : "0";
            r.status = r.oracle_value == r.formula_value ? ClaimStatus::match : ClaimStatus::mismatch;
            r.witness = std::to_string(sets) + " independent non-mono sets checked";
          });

  reg.family("SN-COMPLETE", "phi(K_n) = (n-1)(n-2)/2", {range("n", 3, 10)},
             [](const ParamPoint& p) { return P(p, "n") >= 1; },
             [](const ParamPoint& p) { return call("complete", {P(p, "n")}); },
             [](const ParamPoint& p) {
               const long n = P(p, "n");
               return Rational((n - 1) * (n - 2), 2);
             });

  reg.add("SN-COMPLETE-TRIANGLES", ClaimKind::identity_relation,
          "phi(K_n) = number of triangles containing the non-mono vertex", {range("n", 3, 10)},
          [](const ParamPoint& p) { return P(p, "n") >= 1; },
          [](const ParamPoint& p, const EvalContext& ctx, ClaimReport& r) {
            r.graph = call("complete", {P(p, "n")});
            auto g = build(r.graph);
            auto s = phi(g, ctx);
            r.witness = nonmono_str(g, s);
            if (s.witness_nonmono.size() != 1)
              return unsupported(r, "optimal labeling does not have exactly one non-mono vertex");
            exact(r, static_cast<long>(triangles_at(g, s.witness_nonmono[0])), static_cast<long>(s.value));
          });

  const std::vector<std::string> cut_cases = {
      "complete(3)", "complete(4)", "complete(5)", "complete(6)", "complete(7)", "cycle(5)", "cycle(7)",
      "wheel(4)", "wheel(5)", "complete_sun(3)", "windmill(3, 2)", "complete_split(3, 2)"};

  reg.cases("SN-BIPARTIZATION", ClaimKind::identity_relation,
            "phi(G) = |E'| for a minimum edge set E' with G - E' bipartite", cut_cases,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto cut = max_cut(g, ctx);
              auto s = phi(g, ctx);
              exact(r, static_cast<long>(g.size() - cut.edges), static_cast<long>(s.value));
              r.witness = nonmono_str(g, s) + "; bipartization leaves a cut of " + std::to_string(cut.edges);
            });

  reg.cases("MAXBIP-EDGES", ClaimKind::identity_relation,
            "a largest bipartite subgraph of G has |E| - phi(G) edges", cut_cases,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto cut = max_cut(g, ctx);
              auto s = phi(g, ctx);
              exact(r, static_cast<long>(g.size() - s.value), static_cast<long>(cut.edges));
              std::vector<VertexId> side;
              for (VertexId v = 0; v < g.order(); ++v)
                if ((cut.side >> v) & 1) side.push_back(v);
              r.witness = "cut side " + set_str(g, side);
            });
}

void parameter_claims(Registry& reg) {
  reg.cases("SN-CHROMATIC-CLASSES", ClaimKind::exact_formula,
            "phi(G) = number of vertices outside the two largest colour classes",
            {"complete(3)", "complete(4)", "complete(5)", "complete(6)", "cycle(3)", "cycle(4)", "cycle(5)",
             "cycle(6)", "cycle(7)", "wheel(4)", "wheel(5)", "wheel(6)", "complete_bipartite(2, 3)", "gear(3)",
             "complete_sun(4)", "windmill(3, 3)"},
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              require_cap(g, ctx.exact_cap, kBruteforceCap, "colour class search");
              const auto chi = chromatic_number(g, ctx.exact_cap);
              const auto both = two_largest_classes(g, chi);
              auto s = phi(g, ctx);
              exact(r, static_cast<long>(g.order() - both), static_cast<long>(s.value));
              r.witness = "chi " + std::to_string(chi) + ", two largest classes cover " + std::to_string(both) +
                          "; " + nonmono_str(g, s);
            });

  reg.cases("SN-CHROMATIC-GAP", ClaimKind::identity_relation,
            "chi(G) - phi(G) = 2 for bipartite graphs and cycles",
            {"path(2)", "path(3)", "path(4)", "path(5)", "path(6)", "cycle(3)", "cycle(4)", "cycle(5)",
             "cycle(6)", "cycle(7)", "cycle(8)", "cycle(9)", "complete_bipartite(2, 3)",
             "complete_bipartite(3, 3)", "gear(4)"},
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              const auto chi = chromatic_number(g, ctx.exact_cap);
              auto s = phi(g, ctx);
              exact(r, 2, static_cast<long>(chi) - static_cast<long>(s.value));
              r.witness = "chi " + std::to_string(chi) + ", phi " + std::to_string(s.value);
            });

  reg.add("SN-MATCHING-PATH-CYCLE", ClaimKind::exact_formula,
          "phi(G) = ceil(n/2) - nu(G) for paths (family 0) and cycles (family 1) on n vertices",
          {range("family", 0, 1), range("n", 3, 10)},
          [](const ParamPoint& p) { return (P(p, "family") == 0 || P(p, "family") == 1) && P(p, "n") >= 3; },
          [](const ParamPoint& p, const EvalContext& ctx, ClaimReport& r) {
            const long n = P(p, "n");
            r.graph = call(P(p, "family") == 0 ? "path" : "cycle", {n});
            auto g = build(r.graph);
            const auto nu = static_cast<long>(matching_number(g));
            auto s = phi(g, ctx);
            exact(r, (n + 1) / 2 - nu, static_cast<long>(s.value));
            r.witness = "nu " + std::to_string(nu) + "; " + nonmono_str(g, s);
          });

  auto decomposition_formula = [](std::size_t max_even) {
    return [max_even](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
      auto d = odd_cycle_decomposition(g);
      if (!d) return unsupported(r, "graph is not Eulerian");
      r.witness = cycles_str(g, *d);
      const auto even = d->cycles.size() - d->odd_count;
      if (even > max_even)
        return unsupported(r, "decomposition witness has " + std::to_string(even) + " even cycle(s)");
      long sum = 0;
      for (const auto& c : d->cycles) sum += static_cast<long>((c.size() + 1) / 2);
      const auto nu = static_cast<long>(matching_number(g));
      auto s = phi(g, ctx);
      exact(r, sum - nu, static_cast<long>(s.value));
      r.note = "nu " + std::to_string(nu);
    };
  };
  reg.cases("SN-ODD-CYCLE-DECOMP", ClaimKind::exact_formula,
            "phi(G) = sum ceil(n_i/2) - nu(G) when G decomposes into odd cycles C_{n_i}", kEulerian,
            decomposition_formula(0));
  reg.cases("SN-EULER-ONE-EVEN", ClaimKind::exact_formula,
            "phi(G) = sum ceil(n_i/2) - nu(G) for Eulerian G with at most one even cycle", kEulerian,
            decomposition_formula(1));

  reg.cases("SN-COMPLETE-BIP-MAX", ClaimKind::exact_formula,
            "phi(G) = m - nu(n - nu) when a largest bipartite subgraph is complete bipartite",
            {"complete(3)", "complete(4)", "complete(5)", "complete(6)", "complete(7)", "complete(8)",
             "cycle(4)", "complete_bipartite(2, 3)", "wheel(4)", "complete_split(2, 3)", "complete_split(3, 2)",
             "cycle(5)"},
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto cut = max_cut(g, ctx);
              if (!cut.some_complete) return unsupported(r, "no maximum cut is a complete bipartite subgraph");
              const auto n = static_cast<long>(g.order()), m = static_cast<long>(g.size());
              const auto nu = static_cast<long>(matching_number(g));
              auto s = phi(g, ctx);
              exact(r, m - nu * (n - nu), static_cast<long>(s.value));
              r.witness = "nu " + std::to_string(nu) + "; " + nonmono_str(g, s);
            });

  reg.cases("MONO-VERTEX-COVER", ClaimKind::identity_relation,
            "fewest mono vertices over weak labelings = vertex cover number", kCorpus,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto cover = minimum_vertex_cover(g, ctx.exact_cap);
              auto mono = mono_vertex_minimum(g, ctx.exact_cap);
              exact(r, static_cast<long>(cover.size()), static_cast<long>(mono.min_mono_vertices));
              r.witness = "cover " + set_str(g, cover);
            });

  reg.cases("SN-COVER-DEGREES", ClaimKind::exact_formula,
            "phi(G) = |E| - sum of d(v) over v outside a minimum vertex cover S", kCorpus,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto cover = minimum_vertex_cover(g, ctx.exact_cap);
              std::vector<VertexId> outside;
              for (VertexId v = 0; v < g.order(); ++v)
                if (!std::binary_search(cover.begin(), cover.end(), v)) outside.push_back(v);
              auto s = phi(g, ctx);
              exact(r, static_cast<long>(g.size()) - static_cast<long>(degree_sum(g, outside)),
                    static_cast<long>(s.value));
              r.witness = "cover " + set_str(g, cover) + "; " + nonmono_str(g, s);
            });

  reg.cases("NONMONO-INDEPENDENCE", ClaimKind::identity_relation,
            "most non-mono vertices over weak labelings = independence number", kCorpus,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto alpha = maximum_independent_set(g, ctx.exact_cap);
              auto cover = minimum_vertex_cover(g, ctx.exact_cap);
              exact(r, static_cast<long>(alpha.size()), static_cast<long>(g.order() - cover.size()));
              r.witness = "independent " + set_str(g, alpha);
            });

  reg.cases("SN-INDEP-AVGDEG", ClaimKind::exact_formula,
            "phi(G) = |E| - alpha(G) * (average degree over a maximum independent set I)", kCorpus,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto I = maximum_independent_set(g, ctx.exact_cap);
              const auto alpha = static_cast<long>(I.size());
              const Rational avg(static_cast<long>(degree_sum(g, I)), alpha);
              auto s = phi(g, ctx);
              exact(r, Rational(static_cast<long>(g.size())) - Rational(alpha) * avg, static_cast<long>(s.value));
              r.witness = "independent " + set_str(g, I) + "; " + nonmono_str(g, s);
            });
}

void operation_claims(Registry& reg) {
  reg.pairs("SN-UNION", ClaimKind::identity_relation,
            "phi(G1 u G2) = phi(G1) + phi(G2) - phi(G1 n G2)", "union",
            {{"named(complete(3), \"c,a1,a2\")", "named(complete(3), \"c,b1,b2\")"},
             {"named(complete(3), \"a,b,c\")", "named(complete(3), \"a,b,d\")"},
             {"cycle(5)", "complete(3)"},
             {"named(cycle(3), \"x,a1,a2\")", "named(cycle(5), \"x,b1,b2,b3,b4\")"},
             {"named(complete(4), \"a,b,c,d\")", "named(complete(4), \"a,b,e,f\")"},
             {"cycle(3)", "rename(cycle(5), \"y\")"},
             {"path(5)", "cycle(5)"}},
            [](const Graph& a, const Graph& b, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto u = graph_union(a, b).graph;
              auto i = graph_intersection(a, b).graph;
              const auto pa = phi(a, ctx).value, pb = phi(b, ctx).value, pi = phi(i, ctx).value;
              auto su = phi(u, ctx);
              exact(r, static_cast<long>(pa + pb) - static_cast<long>(pi), static_cast<long>(su.value));
              r.witness = "phi(G1) " + std::to_string(pa) + ", phi(G2) " + std::to_string(pb) +
                          ", phi(G1 n G2) " + std::to_string(pi) + "; union " + nonmono_str(u, su);
            });

  reg.cases("SN-EULER-ODD-CYCLES", ClaimKind::exact_formula,
            "phi(G) = number of odd cycles in an edge-disjoint cycle decomposition of Eulerian G", kEulerian,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto d = odd_cycle_decomposition(g);
              if (!d) return unsupported(r, "graph is not Eulerian");
              auto s = phi(g, ctx);
              exact(r, static_cast<long>(d->odd_count), static_cast<long>(s.value));
              r.witness = cycles_str(g, *d);
            });

  reg.family("SN-JOIN-COMPLETE",
             "phi(K_m x K_n) = (m+n-1)(m+n-2)/2, read as the join (reading 0) and the cartesian product "
             "(reading 1)",
             {range("m", 1, 4), range("n", 1, 4), range("reading", 0, 1)},
             [](const ParamPoint& p) {
               return P(p, "m") >= 1 && P(p, "m") <= P(p, "n") && (P(p, "reading") == 0 || P(p, "reading") == 1);
             },
             [](const ParamPoint& p) {
               return std::string(P(p, "reading") == 0 ? "join" : "cartesian") + "(" +
                      call("complete", {P(p, "m")}) + ", " + call("complete", {P(p, "n")}) + ")";
             },
             [](const ParamPoint& p) {
               const long s = P(p, "m") + P(p, "n");
               return Rational((s - 1) * (s - 2), 2);
             });

  reg.family("SN-FAN", "phi(K_1 + P_n) = n/2", {range("n", 3, 10)},
             [](const ParamPoint& p) { return P(p, "n") >= 1; },
             [](const ParamPoint& p) { return call("fan", {P(p, "n")}); },
             [](const ParamPoint& p) { return Rational(P(p, "n"), 2); });

  reg.family("SN-WHEEL", "phi(C_n + K_1) = floor((n+1)/2)", {range("n", 3, 10)},
             [](const ParamPoint& p) { return P(p, "n") >= 3; },
             [](const ParamPoint& p) { return call("wheel", {P(p, "n")}); },
             [](const ParamPoint& p) { return Rational((P(p, "n") + 1) / 2); });

  reg.family("SN-DOUBLE-WHEEL", "phi(2C_n + K_1) = n + 1 for odd n, n for even n", {range("n", 3, 8)},
             [](const ParamPoint& p) { return P(p, "n") >= 3; },
             [](const ParamPoint& p) { return call("double_wheel", {P(p, "n")}); },
             [](const ParamPoint& p) {
               const long n = P(p, "n");
               return Rational(n % 2 ? n + 1 : n);
             });

  reg.family("SN-M-WHEEL", "phi(mC_n + K_1) = m floor((n+1)/2)", {range("m", 1, 3), range("n", 3, 6)},
             [](const ParamPoint& p) { return P(p, "m") >= 1 && P(p, "n") >= 3; },
             [](const ParamPoint& p) { return call("m_wheel", {P(p, "m"), P(p, "n")}); },
             [](const ParamPoint& p) { return Rational(P(p, "m") * ((P(p, "n") + 1) / 2)); });

  reg.cases("SN-COMPLEMENT-LB", ClaimKind::lower_bound,
            "for connected G on n vertices with max degree D, a concurrent labeling leaves at least "
            "((n-1)(n-2) - 2D)/2 mono edges in the complement",
            {"path(3)", "path(4)", "path(5)", "path(6)", "path(7)", "cycle(4)", "cycle(5)", "cycle(6)",
             "cycle(7)", "cycle(8)", "wheel(4)", "wheel(5)", "complete_bipartite(2, 3)", "gear(3)",
             "complete_sun(3)", "complete(4)"},
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              if (!is_connected(g)) return unsupported(r, "graph is not connected");
              const auto n = static_cast<long>(g.order()), D = static_cast<long>(g.max_degree());
              auto gc = complement(g).graph;
              auto s = concurrent_minimum(gc, ctx);
              lower(r, Rational((n - 1) * (n - 2) - 2 * D, 2), static_cast<long>(s.value));
              r.witness = "complement " + nonmono_str(gc, s);
            });

  reg.cases("SN-SELFCOMP-LB", ClaimKind::lower_bound,
            "a self-complementary r-regular G and its complement each keep at least r(2r-1)/2 mono edges "
            "under a concurrent labeling",
            {"cycle(5)", "cartesian(complete(3), complete(3))", "path(4)", "cycle(4)"},
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto gc = complement(g).graph;
              if (!is_regular(g)) return unsupported(r, "graph is not regular");
              if (!isomorphic(g, gc)) return unsupported(r, "graph is not self-complementary");
              const auto k = static_cast<long>(g.max_degree());
              auto a = concurrent_minimum(g, ctx), b = concurrent_minimum(gc, ctx);
              lower(r, Rational(k * (2 * k - 1), 2), static_cast<long>(std::min(a.value, b.value)));
              r.witness = "G " + std::to_string(a.value) + ", complement " + std::to_string(b.value);
            });
}

Rational gear_power_formula(long n, long r) {
  if (r == 2) return n % 2 == 0 ? Rational((n + 1) * (n + 1) + 5, 2) : Rational((n + 1) * (n + 1), 2);
  if (r == 3) return n % 2 == 0 ? Rational(n * (n + 1)) : Rational(2 * n * n + 3 * n + 3, 2);
  return Rational(n * (2 * n - 1));
}

Rational uwiasi_join_formula(const Graph& g1, const Graph& g2, std::string& which) {
  auto b1 = *bipartition(g1), b2 = *bipartition(g2);
  const long m1 = static_cast<long>(b1.first.size()), n1 = static_cast<long>(b1.second.size());
  const long m2 = static_cast<long>(b2.first.size()), n2 = static_cast<long>(b2.second.size());
  const long q1 = static_cast<long>(g1.size()), q2 = static_cast<long>(g2.size());
  which = "m1=" + std::to_string(m1) + " n1=" + std::to_string(n1) + " m2=" + std::to_string(m2) +
          " n2=" + std::to_string(n2);
  if (m1 + n1 <= m2 + n2 && m2 <= n2) return q1 + m2 * (m1 + n1);
  if (m1 + n1 <= m2 + n2 && m2 >= n2) return q1 + n2 * (m1 + n1);
  if (m1 <= n1) return q2 + m1 * (m2 + n2);
  return q2 + n1 * (m2 + n2);
}

void power_claims(Registry& reg) {
  reg.family("SN-PATH-POWER", "phi(P_n^r) = (r-1)/(2(r+1)) [r(2n-1-r) + 2i], i = n mod (r+1)",
             {range("n", 3, 10), range("r", 1, 4)},
             [](const ParamPoint& p) { return P(p, "n") >= 1 && P(p, "r") >= 1; },
             [](const ParamPoint& p) { return "power(" + call("path", {P(p, "n")}) + ", " + std::to_string(P(p, "r")) + ")"; },
             [](const ParamPoint& p) {
               const long n = P(p, "n"), r = P(p, "r"), i = n % (r + 1);
               return Rational(r - 1, 2 * (r + 1)) * Rational(r * (2 * n - 1 - r) + 2 * i);
             });

  reg.family("SN-CYCLE-POWER", "phi(C_n^r) = r/(r+1) ((r-1)n + 2i), i = n mod (r+1), r < floor(n/2)",
             {range("n", 3, 10), range("r", 1, 4)},
             [](const ParamPoint& p) { return P(p, "n") >= 3 && P(p, "r") >= 1 && P(p, "r") < P(p, "n") / 2; },
             [](const ParamPoint& p) { return "power(" + call("cycle", {P(p, "n")}) + ", " + std::to_string(P(p, "r")) + ")"; },
             [](const ParamPoint& p) {
               const long n = P(p, "n"), r = P(p, "r"), i = n % (r + 1);
               return Rational(r, r + 1) * Rational((r - 1) * n + 2 * i);
             });

  reg.family("SN-KMN-SQUARED", "phi(K_{m,n}^2) = (m+n-1)(m+n-1)/2", {range("m", 1, 4), range("n", 1, 4)},
             [](const ParamPoint& p) { return P(p, "m") >= 1 && P(p, "m") <= P(p, "n"); },
             [](const ParamPoint& p) { return "power(" + call("complete_bipartite", {P(p, "m"), P(p, "n")}) + ", 2)"; },
             [](const ParamPoint& p) {
               const long s = P(p, "m") + P(p, "n");
               return Rational((s - 1) * (s - 1), 2);
             });

  reg.family("SN-SUN", "phi(S_n) = n(n-1)/2 for the complete sun on 2n vertices", {range("n", 3, 8)},
             [](const ParamPoint& p) { return P(p, "n") >= 3; },
             [](const ParamPoint& p) { return call("complete_sun", {P(p, "n")}); },
             [](const ParamPoint& p) { return Rational(C2(P(p, "n"))); });

  reg.family("SN-SUN-SQUARED", "phi(S_n^2) = n^2 + 1 for odd n, n(2n-1)/2 for even n", {range("n", 3, 7)},
             [](const ParamPoint& p) { return P(p, "n") >= 3; },
             [](const ParamPoint& p) { return "power(" + call("complete_sun", {P(p, "n")}) + ", 2)"; },
             [](const ParamPoint& p) {
               const long n = P(p, "n");
               return n % 2 ? Rational(n * n + 1) : Rational(n * (2 * n - 1), 2);
             });

  reg.family("SN-SUN-POWER", "phi(S_n^r) = (n-1)(2n-1) for n >= 4, r >= 3", {range("n", 4, 7), range("r", 3, 4)},
             [](const ParamPoint& p) { return P(p, "n") >= 4 && P(p, "r") >= 3; },
             [](const ParamPoint& p) {
               return "power(" + call("complete_sun", {P(p, "n")}) + ", " + std::to_string(P(p, "r")) + ")";
             },
             [](const ParamPoint& p) {
               const long n = P(p, "n");
               return Rational((n - 1) * (2 * n - 1));
             });

  reg.add("SN-SPLIT-TRIANGLES", ClaimKind::identity_relation,
          "phi(K_S(r,s)) = number of triangles containing the non-mono clique vertex (taken as k1)",
          {range("r", 2, 5), range("s", 1, 4)}, [](const ParamPoint& p) { return P(p, "r") >= 1 && P(p, "s") >= 1; },
          [](const ParamPoint& p, const EvalContext& ctx, ClaimReport& r) {
            r.graph = call("complete_split", {P(p, "r"), P(p, "s")});
            auto g = build(r.graph);
            auto s = phi(g, ctx);
            exact(r, static_cast<long>(triangles_at(g, g.require("k1"))), static_cast<long>(s.value));
            r.witness = nonmono_str(g, s);
          });

  reg.family("SN-COMPLETE-SPLIT", "phi(K_S(r,s)) = r(r-1)/2", {range("r", 2, 5), range("s", 1, 4)},
             [](const ParamPoint& p) { return P(p, "r") >= 1 && P(p, "s") >= 1; },
             [](const ParamPoint& p) { return call("complete_split", {P(p, "r"), P(p, "s")}); },
             [](const ParamPoint& p) { return Rational(C2(P(p, "r"))); });

  reg.family("SN-SPLIT-SQUARED", "phi(K_S(r,s)^2) = (r+s-1)(r+s-2)/2", {range("r", 2, 5), range("s", 1, 4)},
             [](const ParamPoint& p) { return P(p, "r") >= 1 && P(p, "s") >= 1; },
             [](const ParamPoint& p) { return "power(" + call("complete_split", {P(p, "r"), P(p, "s")}) + ", 2)"; },
             [](const ParamPoint& p) {
               const long t = P(p, "r") + P(p, "s");
               return Rational((t - 1) * (t - 2), 2);
             });

  reg.family("SN-SPLIT-POWER", "phi(K_S(r,s)^p) = (r+s-1)(r+s-2)/2 for p >= 3",
             {range("r", 2, 5), range("s", 1, 4), range("p", 3, 4)},
             [](const ParamPoint& p) { return P(p, "r") >= 1 && P(p, "s") >= 1 && P(p, "p") >= 3; },
             [](const ParamPoint& p) {
               return "power(" + call("complete_split", {P(p, "r"), P(p, "s")}) + ", " + std::to_string(P(p, "p")) + ")";
             },
             [](const ParamPoint& p) {
               const long t = P(p, "r") + P(p, "s");
               return Rational((t - 1) * (t - 2), 2);
             });

  reg.family("SN-WINDMILL", "phi(W(n,k)) = (k/2)(n-1)(n-2)", {range("n", 2, 5), range("k", 2, 4)},
             [](const ParamPoint& p) { return P(p, "n") >= 2 && P(p, "k") >= 2; },
             [](const ParamPoint& p) { return call("windmill", {P(p, "n"), P(p, "k")}); },
             [](const ParamPoint& p) {
               const long n = P(p, "n"), k = P(p, "k");
               return Rational(k * (n - 1) * (n - 2), 2);
             });

  reg.family("SN-WINDMILL-POWER", "phi(W(n,k)^r) = k(n-1)(k(n-1)-1)/2 for r >= 2",
             {range("n", 2, 5), range("k", 2, 4), range("r", 2, 3)},
             [](const ParamPoint& p) { return P(p, "n") >= 2 && P(p, "k") >= 2 && P(p, "r") >= 2; },
             [](const ParamPoint& p) {
               return "power(" + call("windmill", {P(p, "n"), P(p, "k")}) + ", " + std::to_string(P(p, "r")) + ")";
             },
             [](const ParamPoint& p) {
               const long t = P(p, "k") * (P(p, "n") - 1);
               return Rational(t * (t - 1), 2);
             });

  reg.family("SN-WHEEL-SQUARED", "phi(W_{n+1}^r) = n(n-1)/2 for r >= 2", {range("n", 3, 9), range("r", 2, 3)},
             [](const ParamPoint& p) { return P(p, "n") >= 3 && P(p, "r") >= 2; },
             [](const ParamPoint& p) {
               return "power(" + call("wheel", {P(p, "n")}) + ", " + std::to_string(P(p, "r")) + ")";
             },
             [](const ParamPoint& p) { return Rational(C2(P(p, "n"))); });

  reg.family("SN-GEAR-POWER",
             "phi(BW_n^r): ((n+1)^2+5)/2 (r=2, n even), (n+1)^2/2 (r=2, n odd), n(n+1) (r=3, n even), "
             "(2n^2+3n+3)/2 (r=3, n odd), n(2n-1) (r=4)",
             {range("n", 3, 8), range("r", 2, 4)},
             [](const ParamPoint& p) { return P(p, "n") >= 3 && P(p, "r") >= 2 && P(p, "r") <= 4; },
             [](const ParamPoint& p) {
               return "power(" + call("gear", {P(p, "n")}) + ", " + std::to_string(P(p, "r")) + ")";
             },
             [](const ParamPoint& p) { return gear_power_formula(P(p, "n"), P(p, "r")); });

  reg.pairs("SN-UWIASI-JOIN", ClaimKind::exact_formula,
            "phi(G1 + G2) for bipartite G_i(X_i, Y_i), |X_i| = m_i, |Y_i| = n_i, q_i edges: q1 + m2(m1+n1), "
            "q1 + n2(m1+n1), q2 + m1(m2+n2) or q2 + n1(m2+n2) by the first case that applies",
            "join",
            {{"path(2)", "path(2)"},
             {"path(3)", "cycle(4)"},
             {"complete_bipartite(1, 2)", "complete_bipartite(2, 3)"},
             {"cycle(4)", "cycle(4)"},
             {"path(2)", "complete_bipartite(2, 2)"},
             {"complete_bipartite(1, 3)", "path(4)"},
             {"cycle(6)", "path(3)"}},
            [](const Graph& a, const Graph& b, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto g = join(a, b).graph;
              std::string sides;
              auto f = uwiasi_join_formula(a, b, sides);
              auto s = phi(g, ctx);
              exact(r, f, static_cast<long>(s.value));
              r.witness = sides + "; " + nonmono_str(g, s);
            });

  reg.cases("DIAM-POWER-COMPLETE", ClaimKind::identity_relation, "G^d is complete for d = diam(G)",
            {"path(2)", "path(5)", "path(8)", "cycle(5)", "cycle(8)", "wheel(5)", "gear(3)", "gear(6)",
             "complete_sun(4)", "complete_split(3, 2)", "windmill(3, 3)", "complete_bipartite(2, 3)",
             "fan(5)", "m_wheel(2, 4)", "complete(4)"},
            [](const Graph& g, const ParamPoint&, const EvalContext&, ClaimReport& r) {
              auto d = diameter(g);
              if (!d) return unsupported(r, "graph is not connected");
              auto h = power(g, static_cast<long>(std::max<std::size_t>(*d, 1))).graph;
              predicate(r, true, is_complete(h));
              r.witness = "diameter " + std::to_string(*d);
            });
}

// Admissibility predicates are checked on concrete labelings. A graph counts
// as "1-uniform" when every vertex is mono; on graphs without isolated
// vertices this is the same as every edge label being a singleton.

/// All-mono labeling by singletons {4^i}. Sums of up to three of them never
/// carry in base 4, so induced labelings cannot collide by accident.
SetLabeling spread_singletons(const Graph& g) {
  if (g.order() > 31) throw CapExceeded("spread singleton labeling: order above 31");
  SetLabeling f(g.order());
  for (VertexId v = 0; v < g.order(); ++v) f.set(v, IntSet{IntSet::value_type{1} << (2 * v)});
  return f;
}

SetLabeling witness_labeling(const Graph& g, const EvalContext& ctx, bool use_witness) {
  if (!use_witness) return construct_weak(g, {});
  return construct_weak(g, phi(g, ctx).witness_nonmono);
}

/// Non-mono vertices of an operation result inherited from operand-vertex
/// sources; `nonmono_of(operand, vertex, result vertex)` decides each.
template <typename F>
std::vector<VertexId> inherited_nonmono(const OpResult& op, F nonmono_of) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < op.graph.order(); ++v)
    for (const auto& s : op.provenance.sources[v])
      if (s.kind == Source::Kind::vertex && nonmono_of(s.operand, s.vertex, v)) {
        out.push_back(v);
        break;
      }
  return out;
}

bool contains(std::span<const VertexId> vs, VertexId v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

void induced_claim(Registry& reg, std::string id, std::string statement,
                   OpResult (*op)(const Graph&),
                   std::function<bool(const Graph&, const SetLabeling&)> claimed) {
  reg.cases(std::move(id), ClaimKind::admissibility, std::move(statement),
            {"path(4)", "cycle(4)", "cycle(5)", "complete_bipartite(1, 3)", "complete(3)", "complete(4)", "gear(3)"},
            [op, claimed = std::move(claimed)](const Graph& g, const ParamPoint& p, const EvalContext& ctx,
                                               ClaimReport& r) {
              const long mode = P(p, "labeling");
              auto f = mode == 2 ? spread_singletons(g) : witness_labeling(g, ctx, mode == 0);
              auto result = op(g);
              auto report = verify(result.graph, transport(f, g, result));
              predicate(r, claimed(g, f), report.is_wiasi);
              r.witness = "labeling non-mono " + set_str(g, nonmono_vertices(f));
            },
            {range("labeling", 0, 2)});
}

void admissibility_claims(Registry& reg) {
  reg.cases("ADM-ALL", ClaimKind::admissibility, "every graph admits a weak labeling", kCorpus,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto a = verify(g, witness_labeling(g, ctx, true));
              auto b = verify(g, witness_labeling(g, ctx, false));
              predicate(r, true, a.is_wiasi && b.is_wiasi);
              r.witness = "optimal and all-mono labelings verified";
            });

  const std::vector<Pair> join_pairs = {{"path(2)", "path(3)"},
                                        {"cycle(4)", "path(3)"},
                                        {"cycle(5)", "path(2)"},
                                        {"complete(1)", "cycle(4)"},
                                        {"path(3)", "path(3)"}};
  reg.pairs("ADM-JOIN", ClaimKind::admissibility,
            "G1 + G2 is weak iff G1 or G2 is 1-uniform (labeling bit 0: G1 non-mono on its optimal "
            "witness, bit 1: same for G2)",
            "join", join_pairs,
            [](const Graph& a, const Graph& b, const ParamPoint& p, const EvalContext& ctx, ClaimReport& r) {
              const long mode = P(p, "labeling");
              auto fa = witness_labeling(a, ctx, mode & 1), fb = witness_labeling(b, ctx, mode & 2);
              auto na = nonmono_vertices(fa), nb = nonmono_vertices(fb);
              auto op = join(a, b);
              auto I = inherited_nonmono(op, [&](std::size_t k, VertexId v, VertexId) {
                return contains(k == 0 ? na : nb, v);
              });
              auto report = verify(op.graph, assign_labels(op.graph, I));
              predicate(r, all_mono(fa) || all_mono(fb), report.is_wiasi);
              r.witness = "non-mono " + set_str(op.graph, I);
            },
            {range("labeling", 0, 3)});

  const std::vector<Pair> product_pairs = {{"path(3)", "cycle(4)"},
                                           {"cycle(3)", "cycle(3)"},
                                           {"complete(4)", "path(2)"},
                                           {"cycle(5)", "path(2)"},
                                           {"wheel(4)", "path(2)"}};
  reg.pairs("ADM-CARTESIAN", ClaimKind::admissibility, "the cartesian product of weak graphs admits a weak labeling",
            "cartesian", product_pairs,
            [](const Graph& a, const Graph& b, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto g = cartesian_product(a, b).graph;
              auto s = phi(g, ctx);
              predicate(r, true, verify(g, construct_weak(g, s.witness_nonmono)).is_wiasi);
              r.witness = nonmono_str(g, s);
            });

  reg.pairs("ADM-FACTORS", ClaimKind::admissibility, "every factor of a weak cartesian product admits a weak labeling",
            "cartesian", product_pairs,
            [](const Graph& a, const Graph& b, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto g = cartesian_product(a, b).graph;
              const bool product_ok = verify(g, construct_weak(g, phi(g, ctx).witness_nonmono)).is_wiasi;
              const bool factors_ok = verify(a, witness_labeling(a, ctx, true)).is_wiasi &&
                                      verify(b, witness_labeling(b, ctx, true)).is_wiasi;
              predicate(r, product_ok, factors_ok);
              r.witness = "product and both factors labeled from optimal witnesses";
            });

  reg.pairs("ADM-CORONA", ClaimKind::admissibility,
            "G1 o G2 is weak iff G1 is 1-uniform or the copies of G2 at non-mono vertices of G1 are 1-uniform "
            "(labeling 0: all optimal; 1: G1 all mono; 2: copies at non-mono G1 vertices all mono)",
            "corona",
            {{"cycle(4)", "path(2)"},
             {"path(3)", "path(2)"},
             {"complete(3)", "complete(1)"},
             {"cycle(5)", "path(3)"},
             {"path(2)", "cycle(3)"}},
            [](const Graph& a, const Graph& b, const ParamPoint& p, const EvalContext& ctx, ClaimReport& r) {
              const long mode = P(p, "labeling");
              auto fa = witness_labeling(a, ctx, mode != 1);
              auto na = nonmono_vertices(fa);
              auto nb = nonmono_vertices(witness_labeling(b, ctx, true));
              auto op = corona(a, b);
              const auto p1 = a.order(), p2 = b.order();
              // copy i occupies ids p1 + i*p2 .. p1 + (i+1)*p2 - 1
              auto copy_all_mono = [&](VertexId i) { return mode == 2 && contains(na, i); };
              auto I = inherited_nonmono(op, [&](std::size_t k, VertexId v, VertexId res) {
                if (k == 0) return contains(na, v);
                const auto copy = static_cast<VertexId>((res - p1) / p2);
                return !copy_all_mono(copy) && contains(nb, v);
              });
              bool copies_ok = true;
              for (auto i : na)
                if (!copy_all_mono(i) && !nb.empty()) copies_ok = false;
              auto report = verify(op.graph, assign_labels(op.graph, I));
              predicate(r, na.empty() || copies_ok, report.is_wiasi);
              r.witness = "non-mono " + set_str(op.graph, I);
            },
            {range("labeling", 0, 2)});

  reg.cases("ADM-SMOOTHING", ClaimKind::admissibility,
            "smoothing a degree-2 vertex v (not in a triangle, neighbours u, w) keeps the induced labeling weak "
            "iff v is non-mono or uv or vw is mono (labeling 0: optimal; 1: u and w non-mono)",
            {"cycle(5)", "cycle(6)", "path(4)", "gear(3)", "complete_bipartite(2, 3)"},
            [](const Graph& g, const ParamPoint& p, const EvalContext& ctx, ClaimReport& r) {
              std::optional<VertexId> v;
              for (VertexId x = 0; x < g.order() && !v; ++x)
                if (g.degree(x) == 2 && !g.adjacent(g.neighbors(x)[0], g.neighbors(x)[1])) v = x;
              if (!v) return unsupported(r, "no degree-2 vertex outside a triangle");
              const auto u = g.neighbors(*v)[0], w = g.neighbors(*v)[1];
              auto f = P(p, "labeling") == 0 ? witness_labeling(g, ctx, true) : construct_weak(g, std::vector{u, w});
              auto op = smooth_degree2(g, *v);
              auto report = verify(op.graph, transport(f, g, op));
              const bool claimed = !f.at(*v).is_singleton() || f.edge_label(Edge(u, *v)).is_singleton() ||
                                   f.edge_label(Edge(*v, w)).is_singleton();
              predicate(r, claimed, report.is_wiasi);
              r.witness = "smoothed " + g.name(*v) + ", non-mono " + set_str(g, nonmono_vertices(f));
            },
            {range("labeling", 0, 1)});

  induced_claim(reg, "ADM-LINE",
                "L(G) with the induced labeling is weak iff every pair of adjacent edges has a mono edge "
                "(labeling 0: optimal; 1: all mono; 2: all mono, singletons {4^i})",
                line_graph, [](const Graph& g, const SetLabeling& f) {
                  for (VertexId v = 0; v < g.order(); ++v) {
                    std::size_t nonmono_edges = 0;
                    for (auto w : g.neighbors(v))
                      if (!f.edge_label(Edge(v, w)).is_singleton()) ++nonmono_edges;
                    if (nonmono_edges >= 2) return false;
                  }
                  return true;
                });
  induced_claim(reg, "ADM-TOTAL",
                "T(G) with the induced labeling is weak iff the labeling of G is 1-uniform "
                "(labeling 0: optimal; 1: all mono; 2: all mono, singletons {4^i})",
                total_graph, [](const Graph&, const SetLabeling& f) { return all_mono(f); });
  induced_claim(reg, "ADM-SUBDIVISION",
                "the complete subdivision with the induced labeling is weak iff the labeling of G is 1-uniform "
                "(labeling 0: optimal; 1: all mono; 2: all mono, singletons {4^i})",
                complete_subdivision, [](const Graph&, const SetLabeling& f) { return all_mono(f); });
}

void uniform_claims(Registry& reg) {
  reg.cases("ADM-UNIFORM-BIPARTITE", ClaimKind::admissibility, "G has a weakly k-uniform labeling iff G is bipartite",
            kCorpus,
            [](const Graph& g, const ParamPoint& p, const EvalContext& ctx, ClaimReport& r) {
              const auto k = static_cast<std::size_t>(P(p, "k"));
              predicate(r, is_bipartite(g), uniform_labeling_exists(g, k, ctx));
            },
            {range("k", 2, 3)});

  reg.cases("ADM-UNIFORM-SPARING0", ClaimKind::admissibility, "G has a uniform weak labeling iff phi(G) = 0", kCorpus,
            [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto s = phi(g, ctx);
              predicate(r, s.value == 0, uniform_labeling_exists(g, 2, ctx));
              r.witness = "phi " + std::to_string(s.value);
            });

  reg.cases("ADM-UNIFORM-ARBITRARY", ClaimKind::admissibility,
            "a graph with a uniform weak labeling has a k-uniform one for every k >= 2 (checked k = 2..6)",
            kBipartiteCorpus,
            [](const Graph& g, const ParamPoint&, const EvalContext&, ClaimReport& r) {
              bool ok = true;
              for (std::size_t k = 2; k <= 6; ++k) ok = ok && verify(g, construct_k_uniform(g, k)).uniformity == k;
              predicate(r, true, ok);
            });

  reg.cases("ADM-UNIFORM-HEREDITARY", ClaimKind::admissibility,
            "every subgraph of a uniform weak graph is uniform weak (all one-vertex and one-edge deletions, "
            "restricted labeling)",
            kBipartiteCorpus,
            [](const Graph& g, const ParamPoint& p, const EvalContext&, ClaimReport& r) {
              const auto k = static_cast<std::size_t>(P(p, "k"));
              auto f = construct_k_uniform(g, k);
              std::size_t checked = 0;
              bool ok = true;
              auto check = [&](const Graph& h) {
                auto rep = verify(h, restrict_labeling(f, g, h));
                ok = ok && rep.is_wiasi && (h.size() == 0 || rep.uniformity == k);
                ++checked;
              };
              for (VertexId v = 0; v < g.order(); ++v) {
                auto keep = all_vertices(g);
                keep.erase(keep.begin() + v);
                check(g.induced(keep));
              }
              for (std::size_t i = 0; i < g.size(); ++i) {
                std::vector<Edge> es(g.edges().begin(), g.edges().end());
                es.erase(es.begin() + static_cast<std::ptrdiff_t>(i));
                check(g.with_edges(std::move(es)));
              }
              predicate(r, true, ok);
              r.witness = std::to_string(checked) + " subgraphs";
            },
            {range("k", 2, 3)});

  const std::vector<Pair> bip_pairs = {{"path(3)", "cycle(4)"},
                                       {"complete_bipartite(2, 3)", "path(2)"},
                                       {"gear(3)", "path(3)"},
                                       {"path(4)", "path(4)"},
                                       {"cycle(4)", "complete_bipartite(1, 3)"}};
  reg.pairs("ADM-UNIFORM-UNION", ClaimKind::admissibility,
            "the disjoint union of uniform weak graphs is uniform weak", "dunion", bip_pairs,
            [](const Graph& a, const Graph& b, const ParamPoint&, const EvalContext&, ClaimReport& r) {
              auto g = disjoint_union(a, b).graph;
              predicate(r, true, verify(g, construct_k_uniform(g, 2)).uniformity == 2u);
            });

  reg.pairs("ADM-UNIFORM-CARTESIAN", ClaimKind::admissibility,
            "the cartesian product of uniform weak graphs is uniform weak with phi = 0", "cartesian", bip_pairs,
            [](const Graph& a, const Graph& b, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              auto g = cartesian_product(a, b).graph;
              const bool uniform = verify(g, construct_k_uniform(g, 2)).uniformity == 2u;
              auto s = phi(g, ctx);
              predicate(r, true, uniform && s.value == 0);
              r.witness = "phi " + std::to_string(s.value);
            });

  reg.cases("ADM-UNIFORM-SUBDIV", ClaimKind::admissibility, "the complete subdivision of any graph is uniform weak",
            kCorpus, [](const Graph& g, const ParamPoint&, const EvalContext&, ClaimReport& r) {
              auto h = complete_subdivision(g).graph;
              predicate(r, true, is_bipartite(h) && verify(h, construct_k_uniform(h, 2)).uniformity == 2u);
            });

  reg.cases("ADM-UNIFORM-SUPERSUBDIV", ClaimKind::admissibility,
            "the super subdivision (edges replaced by K_{2,m}) of any graph is uniform weak", kCorpus,
            [](const Graph& g, const ParamPoint& p, const EvalContext&, ClaimReport& r) {
              auto h = super_subdivision(g, P(p, "m")).graph;
              predicate(r, true, is_bipartite(h) && verify(h, construct_k_uniform(h, 2)).uniformity == 2u);
            },
            {range("m", 1, 2)});

  reg.cases("ADM-UNIFORM-CONTRACTION", ClaimKind::admissibility,
            "contracting an edge of a uniform weak graph gives a graph with no uniform weak labeling "
            "(first edge contracted)",
            kBipartiteCorpus, [](const Graph& g, const ParamPoint&, const EvalContext& ctx, ClaimReport& r) {
              const auto e = g.edges()[0];
              auto h = contract_edge(g, e).graph;
              predicate(r, false, uniform_labeling_exists(h, 2, ctx));
              r.witness = "contracted " + edge_name(g, e);
            });
}

std::vector<Claim> make_registry() {
  Registry reg;
  basic_claims(reg);
  parameter_claims(reg);
  operation_claims(reg);
  power_claims(reg);
  admissibility_claims(reg);
  uniform_claims(reg);
  return reg.take();
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = make_registry();
  return registry;
}

}  // namespace iasi
