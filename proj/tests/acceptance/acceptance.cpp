// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Thresholds and time budgets are fixed
// here; nothing is read from the environment.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "iasi/claims.hpp"
#include "iasi/error.hpp"
#include "iasi/families.hpp"
#include "iasi/intset.hpp"
#include "iasi/io.hpp"
#include "iasi/labeling.hpp"
#include "iasi/ops.hpp"
#include "iasi/params.hpp"
#include "iasi/sparing.hpp"
#include "json.hpp"
#include "support/corpus.hpp"

#ifndef IASI_GOLDEN_PATH
#error "IASI_GOLDEN_PATH must point at the committed claim table"
#endif

namespace {

using iasi::Family;
using iasi::Graph;
using Clock = std::chrono::steady_clock;

// Sumset law domain.
constexpr std::size_t kMaxSetSize = 5;
constexpr unsigned kElementBound = 40;
// Solver coherence domain.
constexpr std::size_t kCatalogOrder = 14;
constexpr std::size_t kPowerOrder = 12;
// Time budgets in seconds.
constexpr double kSumsetBudget = 60;
constexpr double kSolverBudget = 300;
constexpr double kValuesBudget = 300;
constexpr double kPowerBudget = 60;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void add(const std::string& what) {
    if (++count_ <= 6) items_ += (items_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  Outcome outcome(const std::string& ok) const {
    if (count_ == 0) return {true, ok};
    return {false, std::to_string(count_) + " failure(s): " + items_ + (count_ > 6 ? "; ..." : "")};
  }

 private:
  std::size_t count_ = 0;
  std::string items_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Graph> random_corpus() {
  std::vector<Graph> out;
  for (const auto& c : corpus::random_cases()) out.push_back(iasi::random_graph(c.n, c.p, c.seed));
  return out;
}

// ---------------------------------------------------------------------------
// 1. max(|A|,|B|) <= |A+B| <= |A||B|, and equality on the left forces a
// singleton.
//
// |A+B| is unchanged by translating A or B, so every pair of sets with
// elements below the bound is covered by the pairs whose minima are 0 (the
// translated sets stay inside the domain). Sumset is commutative, so only
// unordered pairs are visited. Sets are bitmasks; the sumset of A and B is
// the OR of A shifted by every element of B.
// ---------------------------------------------------------------------------

using Wide = unsigned __int128;

int popcount(Wide x) {
  return __builtin_popcountll(static_cast<std::uint64_t>(x)) +
         __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

struct SetList {
  std::vector<std::vector<std::uint64_t>> masks_by_size;  // sets containing 0
  std::vector<std::vector<std::vector<unsigned>>> elems_by_size;
};

SetList zero_based_sets() {
  SetList s;
  s.masks_by_size.resize(kMaxSetSize + 1);
  s.elems_by_size.resize(kMaxSetSize + 1);
  std::vector<unsigned> cur{0};
  auto rec = [&](auto&& self, unsigned next) -> void {
    std::uint64_t m = 0;
    for (auto e : cur) m |= std::uint64_t{1} << e;
    s.masks_by_size[cur.size()].push_back(m);
    s.elems_by_size[cur.size()].push_back(cur);
    if (cur.size() == kMaxSetSize) return;
    for (unsigned e = next; e < kElementBound; ++e) {
      cur.push_back(e);
      self(self, e + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return s;
}

Outcome sumset_law() {
  const auto t0 = Clock::now();
  const auto sets = zero_based_sets();
  Failures fails;
  std::uint64_t pairs = 0;

  auto check = [&](std::size_t a, std::size_t b, int s, const std::vector<unsigned>& ea,
                   const std::array<unsigned, kMaxSetSize>& eb, std::size_t nb) {
    const auto lo = static_cast<int>(std::max(a, b));
    const auto hi = static_cast<int>(a * b);
    if (lo <= s && s <= hi && (s != lo || std::min(a, b) == 1)) return;
    std::ostringstream os;
    os << "A={";
    for (std::size_t i = 0; i < ea.size(); ++i) os << (i ? "," : "") << ea[i];
    os << "} B={";
    for (std::size_t i = 0; i < nb; ++i) os << (i ? "," : "") << eb[i];
    os << "} |A+B|=" << s;
    fails.add(os.str());
  };

  for (std::size_t a = 1; a <= kMaxSetSize; ++a) {
    const auto& masks_a = sets.masks_by_size[a];
    for (std::size_t ia = 0; ia < masks_a.size(); ++ia) {
      const Wide wa = masks_a[ia];
      const auto& ea = sets.elems_by_size[a][ia];
      // B ranges over zero-based sets of size >= |A|; at equal size only
      // B >= A in element order. `order` compares the first |A| elements of
      // B with A: 0 equal so far, 1 greater, -1 smaller.
      std::array<unsigned, kMaxSetSize> eb{};
      auto walk = [&](auto&& self, std::size_t depth, Wide acc, int order) -> void {
        if (depth > a || (depth == a && order >= 0)) {
          ++pairs;
          check(a, depth, popcount(acc), ea, eb, depth);
        }
        if (depth == kMaxSetSize) return;
        if (a == kMaxSetSize && order < 0) return;
        unsigned start = eb[depth - 1] + 1;
        if (a == kMaxSetSize && order == 0) start = std::max(start, ea[depth]);
        if (depth + 1 == kMaxSetSize && (depth + 1 > a || order != 0 || a == kMaxSetSize)) {
          // Last element: every child counts (for |A| = 5, `start` already
          // keeps B >= A), so the leaves are checked in a flat loop.
          const auto b = depth + 1;
          const auto lo = static_cast<int>(std::max(a, b));
          const auto hi = static_cast<int>(a * b);
          const bool singleton = std::min(a, b) == 1;
          for (unsigned e = start; e < kElementBound; ++e) {
            const int s = popcount(acc | (wa << e));
            if (s < lo || s > hi || (s == lo && !singleton)) {
              eb[depth] = e;
              check(a, b, s, ea, eb, b);
            }
          }
          pairs += kElementBound - start;
          return;
        }
        for (unsigned e = start; e < kElementBound; ++e) {
          eb[depth] = e;
          int next = order;
          if (order == 0 && depth < a) next = e < ea[depth] ? -1 : e > ea[depth] ? 1 : 0;
          self(self, depth + 1, acc | (wa << e), next);
        }
      };
      walk(walk, 1, wa, 0);
    }
  }

  // The library sumset against the bitmask computation on every unordered
  // pair of zero-based sets of size <= 3.
  std::vector<std::vector<unsigned>> small;
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& e : sets.elems_by_size[k]) small.push_back(e);
  for (std::size_t i = 0; i < small.size(); ++i) {
    std::vector<std::uint64_t> xa(small[i].begin(), small[i].end());
    const iasi::IntSet A(xa);
    Wide ma = 0;
    for (auto e : small[i]) ma |= Wide{1} << e;
    for (std::size_t j = i; j < small.size(); ++j) {
      std::vector<std::uint64_t> xb(small[j].begin(), small[j].end());
      Wide m = 0;
      for (auto e : small[j]) m |= ma << e;
      if (iasi::sumset(A, iasi::IntSet(xb)).size() != static_cast<std::size_t>(popcount(m)))
        fails.add("library sumset differs for " + iasi::to_string(A) + " + " + iasi::to_string(iasi::IntSet(xb)));
    }
  }

  const double t = seconds_since(t0);
  if (t > kSumsetBudget) fails.add("took " + std::to_string(t) + " s");
  std::ostringstream ok;
  ok << pairs << " unordered zero-based pairs, sizes <= " << kMaxSetSize << ", elements < " << kElementBound;
  return fails.outcome(ok.str());
}

// ---------------------------------------------------------------------------
// 2 and 3. Solver and constructor coherence.
// ---------------------------------------------------------------------------

struct SolverRun {
  std::vector<Graph> graphs;
  std::vector<iasi::SparingResult> exact;
  double seconds = 0;
};

SolverRun solver_run() {
  SolverRun run;
  const auto t0 = Clock::now();
  run.graphs = corpus::catalog(kCatalogOrder);
  for (auto& g : random_corpus()) run.graphs.push_back(std::move(g));
  for (const auto& g : run.graphs) run.exact.push_back(iasi::sparing_exact(g));
  run.seconds = seconds_since(t0);
  return run;
}

Outcome solver_coherence(const SolverRun& run) {
  const auto t0 = Clock::now();
  Failures fails;
  for (std::size_t i = 0; i < run.graphs.size(); ++i) {
    const auto& g = run.graphs[i];
    auto brute = iasi::sparing_bruteforce(g);
    if (brute.value != run.exact[i].value)
      fails.add(g.label() + ": exact " + std::to_string(run.exact[i].value) + " vs brute force " +
                std::to_string(brute.value));
  }
  const double t = run.seconds + seconds_since(t0);
  if (t > kSolverBudget) fails.add("took " + std::to_string(t) + " s");
  return fails.outcome(std::to_string(run.graphs.size()) + " graphs (catalog order <= 14 plus 200 random)");
}

Outcome constructor_coherence(const SolverRun& run) {
  Failures fails;
  for (std::size_t i = 0; i < run.graphs.size(); ++i) {
    const auto& g = run.graphs[i];
    const auto& s = run.exact[i];
    try {
      auto r = iasi::verify(g, iasi::construct_weak(g, s.witness_nonmono));
      if (!r.is_wiasi || r.mono_edge_count != s.value)
        fails.add(g.label() + ": wiasi=" + (r.is_wiasi ? "yes" : "no") + " mono=" +
                  std::to_string(r.mono_edge_count) + " phi=" + std::to_string(s.value));
    } catch (const std::exception& e) {
      fails.add(g.label() + ": " + e.what());
    }
  }
  return fails.outcome(std::to_string(run.graphs.size()) + " witnesses verified");
}

// ---------------------------------------------------------------------------
// 4. Closed-form values.
// ---------------------------------------------------------------------------

Outcome closed_forms() {
  const auto t0 = Clock::now();
  Failures fails;
  std::size_t checked = 0;
  auto expect = [&](Family f, std::vector<long> params, long want) {
    auto g = iasi::generate(f, params);
    const auto got = static_cast<long>(iasi::sparing_exact(g).value);
    ++checked;
    if (got != want) fails.add(g.label() + " = " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  for (long n = 3; n <= 9; ++n) expect(Family::complete, {n}, (n - 1) * (n - 2) / 2);
  for (long n = 3; n <= 12; ++n) expect(Family::cycle, {n}, n % 2);
  for (long r = 2; r <= 5; ++r)
    for (long s = 1; s <= 4; ++s) expect(Family::complete_split, {r, s}, r * (r - 1) / 2);
  for (long n = 2; n <= 5; ++n)
    for (long k = 2; k <= 4; ++k) expect(Family::windmill, {n, k}, k * (n - 1) * (n - 2) / 2);
  for (long n = 3; n <= 6; ++n) expect(Family::complete_sun, {n}, n * (n - 1) / 2);
  for (long n = 3; n <= 8; ++n) expect(Family::gear, {n}, 0);
  const double t = seconds_since(t0);
  if (t > kValuesBudget) fails.add("took " + std::to_string(t) + " s");
  return fails.outcome(std::to_string(checked) + " values");
}

// ---------------------------------------------------------------------------
// 5. k-uniform labelings exist exactly on the bipartite members.
// ---------------------------------------------------------------------------

Outcome uniform_labelings() {
  Failures fails;
  auto graphs = corpus::catalog(kCatalogOrder);
  for (auto& g : random_corpus()) graphs.push_back(std::move(g));
  std::size_t built = 0, refused = 0;
  for (const auto& g : graphs) {
    const bool bipartite = iasi::is_bipartite(g);
    for (std::size_t k : {2u, 3u, 4u}) {
      try {
        auto r = iasi::verify(g, iasi::construct_k_uniform(g, k));
        if (!bipartite) {
          fails.add(g.label() + " k=" + std::to_string(k) + ": built on a non-bipartite graph");
        } else if (!r.is_wiasi || (g.size() > 0 && r.uniformity != k)) {
          fails.add(g.label() + " k=" + std::to_string(k) + ": labeling is not weakly k-uniform");
        } else {
          ++built;
        }
      } catch (const iasi::Unsupported&) {
        if (bipartite)
          fails.add(g.label() + " k=" + std::to_string(k) + ": refused a bipartite graph");
        else
          ++refused;
      }
    }
  }
  return fails.outcome(std::to_string(built) + " built, " + std::to_string(refused) + " refused");
}

// ---------------------------------------------------------------------------
// 6. Claim status table against the committed golden table.
// ---------------------------------------------------------------------------

Outcome status_table(const iasi::StatusTable& table) {
  Failures fails;
  const auto& registry = iasi::claim_registry();
  if (table.claims.size() != registry.size()) fails.add("table has " + std::to_string(table.claims.size()) + " claims");
  for (const auto& s : table.claims)
    if (s.reports.empty()) fails.add(s.id + ": no verdict recorded");

  std::string golden_text;
  try {
    golden_text = iasi::read_file(IASI_GOLDEN_PATH);
  } catch (const iasi::InvalidInput& e) {
    fails.add(e.what());
    return fails.outcome("");
  }
  const auto golden = nlohmann::json::parse(golden_text);
  auto golden_claim = [&](const std::string& id) -> const nlohmann::json* {
    for (const auto& c : golden["claims"])
      if (c["id"] == id) return &c;
    return nullptr;
  };
  auto require_verdict = [&](const std::string& id, const std::string& want) {
    const auto* c = golden_claim(id);
    if (!c)
      fails.add(id + " missing from golden table");
    else if ((*c)["verdict"] != want)
      fails.add(id + " golden verdict " + (*c)["verdict"].get<std::string>() + ", expected " + want);
  };
  require_verdict("SN-COMPLETE", "MATCH");
  require_verdict("SN-ODD-CYCLE", "MATCH");
  require_verdict("SN-BIPARTITE", "MATCH");
  require_verdict("SN-BIPARTIZATION", "MISMATCH");
  require_verdict("SN-FAN", "NON_INTEGER");

  if (const auto* c = golden_claim("SN-BIPARTIZATION")) {
    bool k5 = false;
    for (const auto& p : (*c)["points"])
      if (p["graph"] == "complete(5)")
        k5 = p["status"] == "MISMATCH" && p["formula"] == "4" && p["oracle"] == "6";
    if (!k5) fails.add("SN-BIPARTIZATION at K_5 is not MISMATCH with formula 4, oracle 6");
  }
  if (const auto* c = golden_claim("SN-FAN")) {
    std::size_t odd = 0;
    for (const auto& p : (*c)["points"]) {
      if (p["params"]["n"].get<long>() % 2 == 0) continue;
      ++odd;
      if (p["status"] != "NON_INTEGER") fails.add("SN-FAN at odd n=" + p["params"]["n"].dump() + " is not NON_INTEGER");
    }
    if (odd == 0) fails.add("SN-FAN has no odd-n points");
  }

  for (const auto& d : iasi::compare_to_golden(table, golden_text)) fails.add("drift: " + d);
  return fails.outcome(std::to_string(table.claims.size()) + " claims, no drift against " +
                       std::string(IASI_GOLDEN_PATH).substr(std::string(IASI_GOLDEN_PATH).rfind("tests/")));
}

// ---------------------------------------------------------------------------
// 7. Graph powers.
// ---------------------------------------------------------------------------

Outcome powers() {
  const auto t0 = Clock::now();
  Failures fails;
  auto graphs = corpus::catalog(kPowerOrder);
  for (auto& g : random_corpus())
    if (g.order() <= kPowerOrder) graphs.push_back(std::move(g));
  std::size_t complete_checks = 0;
  for (const auto& g : graphs) {
    if (auto d = iasi::diameter(g)) {
      ++complete_checks;
      const long r = std::max<long>(1, static_cast<long>(*d));
      if (!iasi::is_complete(iasi::power(g, r).graph)) fails.add(g.label() + ": power(g, diam) not complete");
    }
    Graph prev = g;
    for (long r = 1; r <= static_cast<long>(g.order()) + 1; ++r) {
      auto next = iasi::power(g, r).graph;
      for (const auto& e : prev.edges())
        if (!next.adjacent(e.u, e.v)) {
          fails.add(g.label() + ": edge lost between r=" + std::to_string(r - 1) + " and r=" + std::to_string(r));
          break;
        }
      prev = std::move(next);
    }
  }
  const double t = seconds_since(t0);
  if (t > kPowerBudget) fails.add("took " + std::to_string(t) + " s");
  return fails.outcome(std::to_string(graphs.size()) + " graphs, " + std::to_string(complete_checks) +
                       " connected");
}

// ---------------------------------------------------------------------------
// 8. Byte-stable round trips and deterministic output.
// ---------------------------------------------------------------------------

Outcome determinism(const iasi::StatusTable& first) {
  Failures fails;
  auto graphs = corpus::catalog(10);
  for (auto& g : random_corpus()) graphs.push_back(std::move(g));
  for (const auto& g : graphs) {
    const auto el = iasi::to_edge_list(g);
    if (iasi::to_edge_list(iasi::parse_edge_list(el)) != el) fails.add(g.label() + ": edge list round trip");
    const auto js = iasi::to_json(g);
    if (iasi::to_json(iasi::parse_graph_json(js)) != js) fails.add(g.label() + ": graph JSON round trip");
    const auto s = iasi::sparing_exact(g);
    const auto f = iasi::construct_weak(g, s.witness_nonmono);
    const auto lj = iasi::labeling_to_json(f, g);
    if (iasi::labeling_to_json(iasi::parse_labeling_json(lj, g), g) != lj) fails.add(g.label() + ": labeling round trip");
    if (iasi::to_json(iasi::sparing_exact(g), g) != iasi::to_json(s, g)) fails.add(g.label() + ": sparing JSON differs");
  }
  for (const auto& c : corpus::random_cases())
    if (iasi::to_json(iasi::random_graph(c.n, c.p, c.seed)) != iasi::to_json(iasi::random_graph(c.n, c.p, c.seed)))
      fails.add("gnp seed " + std::to_string(c.seed) + " not reproducible");
  const auto again = iasi::status_table({}, {}, {}, 1);
  if (iasi::to_json(again) != iasi::to_json(first)) fails.add("claim table JSON differs between runs");
  if (iasi::to_markdown(again) != iasi::to_markdown(first)) fails.add("claim table Markdown differs between runs");
  return fails.outcome(std::to_string(graphs.size()) + " graphs round-tripped, claim table reproduced");
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  criterion %d  %-24s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };

  SolverRun run;
  iasi::StatusTable table;
  report(1, "sumset law", sumset_law);
  report(2, "solver coherence", [&] {
    run = solver_run();
    return solver_coherence(run);
  });
  report(3, "constructor coherence", [&] { return constructor_coherence(run); });
  report(4, "closed-form values", closed_forms);
  report(5, "uniform labelings", uniform_labelings);
  report(6, "claim status table", [&] {
    table = iasi::status_table();
    return status_table(table);
  });
  report(7, "graph powers", powers);
  report(8, "round trips", [&] { return determinism(table); });
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
