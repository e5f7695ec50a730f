// iasi: command-line front end for the set-labeling library.
//
// Exit codes: 0 success, 2 invalid input, 3 exact-computation cap exceeded,
// 4 claim status drifted from the golden table.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iasi/claims.hpp"
#include "iasi/error.hpp"
#include "iasi/expr.hpp"
#include "iasi/io.hpp"
#include "iasi/labeling.hpp"
#include "iasi/params.hpp"
#include "iasi/sparing.hpp"

namespace {

constexpr int kInvalid = 2;
constexpr int kCap = 3;
constexpr int kDrift = 4;

struct Options {
  std::string format;
  std::uint64_t seed = 0;
  std::size_t cap = iasi::kDefaultExactCap;
  std::string out;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("IASI_EXACT_CAP")) {
    try {
      std::size_t used = 0;
      auto v = std::stoul(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw iasi::InvalidInput(std::string("IASI_EXACT_CAP must be a non-negative integer, got '") + env + "'");
  }
  return iasi::kDefaultExactCap;
}

/// A path to an existing file is loaded; anything else is an expression.
iasi::Built resolve(const std::string& input, const Options& opt) {
  if (std::filesystem::is_regular_file(input)) return {iasi::load_graph(input), std::nullopt};
  return iasi::build_expression(input, {opt.seed, {}});
}

void emit(const std::string& text, const Options& opt) {
  if (opt.out.empty())
    std::cout << text;
  else
    iasi::write_file(opt.out, text);
}

int cmd_generate(const std::string& expr, const Options& opt) {
  auto b = resolve(expr, opt);
  const auto* prov = b.provenance ? &*b.provenance : nullptr;
  iasi::GraphFormat f = iasi::GraphFormat::edge_list;
  if (opt.format == "json") f = iasi::GraphFormat::json;
  if (opt.format == "dot") f = iasi::GraphFormat::dot;
  emit(iasi::write_graph(b.graph, f, prov), opt);
  return 0;
}

int cmd_sparing(const std::string& input, bool heuristic, const Options& opt) {
  auto g = resolve(input, opt).graph;
  auto r = heuristic ? iasi::sparing_heuristic(g) : iasi::sparing_exact(g, opt.cap);
  emit(opt.format == "markdown" ? iasi::to_markdown(r, g) : iasi::to_json(r, g), opt);
  return 0;
}

int cmd_label(const std::string& input, std::optional<std::size_t> uniform, const std::string& labeling_out,
              const Options& opt) {
  auto g = resolve(input, opt).graph;
  iasi::SetLabeling f;
  std::optional<iasi::SparingResult> sparing;
  if (uniform) {
    f = iasi::construct_k_uniform(g, *uniform);
  } else {
    sparing = iasi::sparing_exact(g, opt.cap);
    f = iasi::construct_weak(g, sparing->witness_nonmono);
  }
  auto report = iasi::verify(g, f);
  if (!report.is_wiasi || (sparing && report.mono_edge_count != sparing->value)) {
    std::cerr << "internal error: constructed labeling failed verification\n";
    return 1;
  }
  if (!labeling_out.empty()) iasi::write_file(labeling_out, iasi::labeling_to_json(f, g));
  if (opt.format == "dot")
    emit(iasi::to_dot(g, &f), opt);
  else if (opt.format == "markdown")
    emit(iasi::to_markdown(report, g), opt);
  else
    emit(iasi::to_json(report, g, f), opt);
  return 0;
}

int cmd_verify(const std::string& input, const std::string& labeling, const Options& opt) {
  auto g = resolve(input, opt).graph;
  auto f = iasi::parse_labeling_json(iasi::read_file(labeling), g);
  auto report = iasi::verify(g, f);
  if (opt.format == "dot")
    emit(iasi::to_dot(g, &f), opt);
  else if (opt.format == "markdown")
    emit(iasi::to_markdown(report, g), opt);
  else
    emit(iasi::to_json(report, g, f), opt);
  return 0;
}

int cmd_params(const std::string& input, const Options& opt) {
  auto g = resolve(input, opt).graph;
  auto p = iasi::parameters(g, opt.cap);
  emit(opt.format == "markdown" ? iasi::to_markdown(p) : iasi::to_json(p), opt);
  return 0;
}

struct ClaimsOptions {
  std::vector<std::string> claims;
  std::vector<std::string> grid;
  std::string out_md, out_json, golden;
  bool update_golden = false;
  bool list = false;
  unsigned threads = 0;
};

int cmd_check_claims(const ClaimsOptions& c, const Options& opt) {
  if (c.list) {
    for (const auto& claim : iasi::claim_registry())
      std::cout << claim.id << "  [" << iasi::to_string(claim.kind) << "]  " << claim.statement << "\n";
    return 0;
  }
  iasi::Grid grid;
  for (const auto& g : c.grid) iasi::parse_grid_axis(g, grid);
  auto table = iasi::status_table(grid, {opt.cap}, c.claims, c.threads);
  auto md = iasi::to_markdown(table);
  auto json = iasi::to_json(table);
  if (!c.out_md.empty()) iasi::write_file(c.out_md, md);
  if (!c.out_json.empty()) iasi::write_file(c.out_json, json);

  if (opt.format == "json")
    std::cout << json;
  else if (c.out_md.empty() && c.out_json.empty())
    std::cout << md;
  else
    for (const auto& s : table.claims)
      std::cout << s.id << " " << iasi::to_string(s.verdict) << " (" << s.reports.size() << " points)\n";

  if (!c.golden.empty()) {
    if (c.update_golden) {
      iasi::write_file(c.golden, json);
      return 0;
    }
    const bool partial = !grid.empty();
    auto drift = iasi::compare_to_golden(table, iasi::read_file(c.golden), partial);
    for (const auto& d : drift) std::cerr << "drift: " << d << "\n";
    if (!drift.empty()) {
      std::cerr << drift.size() << " change(s) against " << c.golden << "\n";
      return kDrift;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-labeling laboratory: sparing numbers, weak labelings and claim checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  try {
    opt.cap = default_cap();
  } catch (const iasi::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  app.add_option("--seed", opt.seed, "Seed for gnp(n, p) expressions without an explicit seed");
  app.add_option("--cap", opt.cap, "Largest order handled by exact routines (env IASI_EXACT_CAP)");
  app.add_option("-o,--out", opt.out, "Write output to a file instead of stdout");

  std::string input, labeling, labeling_out;
  bool heuristic = false;
  std::optional<std::size_t> uniform;
  ClaimsOptions claims;

  auto* gen = app.add_subcommand("generate", "Write a graph given by a family or expression");
  gen->add_option("expr", input, "Expression, e.g. 'join(K1, cycle(5))' or 'wheel:5'")->required();
  gen->add_option("--format", opt.format, "edgelist | json | dot")
      ->check(CLI::IsMember({"edgelist", "json", "dot"}))
      ->default_str("edgelist");

  auto* sp = app.add_subcommand("sparing", "Sparing number with a witness");
  sp->add_option("input", input, "Graph file or expression")->required();
  sp->add_flag("--heuristic", heuristic, "Local-search upper bound instead of the exact solver");
  sp->add_option("--format", opt.format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));

  auto* lab = app.add_subcommand("label", "Construct and verify an optimal weak labeling");
  lab->add_option("input", input, "Graph file or expression")->required();
  lab->add_option("--uniform", uniform, "Build a weakly k-uniform labeling instead (bipartite graphs)")
      ->check(CLI::Range(2, 64));
  lab->add_option("--labeling", labeling_out, "Write the labeling JSON here");
  lab->add_option("--format", opt.format, "json | markdown | dot")
      ->check(CLI::IsMember({"json", "markdown", "dot"}));

  auto* ver = app.add_subcommand("verify", "Check a labeling file against a graph");
  ver->add_option("input", input, "Graph file or expression")->required();
  ver->add_option("labeling", labeling, "Labeling JSON file")->required()->check(CLI::ExistingFile);
  ver->add_option("--format", opt.format, "json | markdown | dot")
      ->check(CLI::IsMember({"json", "markdown", "dot"}));

  auto* par = app.add_subcommand("params", "Classical graph parameters");
  par->add_option("input", input, "Graph file or expression")->required();
  par->add_option("--format", opt.format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));

  auto* chk = app.add_subcommand("check-claims", "Evaluate the claim catalog over its parameter grids");
  chk->add_option("--claim", claims.claims, "Only these claim ids (repeatable)");
  chk->add_option("--grid", claims.grid, "Override an axis, e.g. n=3..12 or r=2,4 (repeatable)");
  chk->add_option("--out-md", claims.out_md, "Write the Markdown status table");
  chk->add_option("--out-json", claims.out_json, "Write the JSON status table");
  chk->add_option("--golden", claims.golden, "Compare against this JSON table; exit 4 on any change");
  chk->add_flag("--update-golden", claims.update_golden, "Rewrite the --golden file instead of comparing");
  chk->add_flag("--list", claims.list, "List claim ids and exit");
  chk->add_option("--threads", claims.threads, "Worker threads (0 = all cores)");
  chk->add_option("--format", opt.format, "markdown | json")->check(CLI::IsMember({"markdown", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalid;
  }

  try {
    if (*gen) return cmd_generate(input, opt);
    if (*sp) return cmd_sparing(input, heuristic, opt);
    if (*lab) return cmd_label(input, uniform, labeling_out, opt);
    if (*ver) return cmd_verify(input, labeling, opt);
    if (*par) return cmd_params(input, opt);
    if (*chk) return cmd_check_claims(claims, opt);
  } catch (const iasi::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const iasi::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const iasi::Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return 0;
}
