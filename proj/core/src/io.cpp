#include "iasi/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "iasi/error.hpp"
#include "json.hpp"

namespace iasi {
namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

bool has_default_names(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.name(v) != Graph::default_name(v)) return false;
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line, std::size_t max_fields) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    if (out.size() + 1 == max_fields) {
      auto rest = line.substr(i);
      while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.remove_suffix(1);
      out.push_back(rest);
      break;
    }
    auto j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view s, std::size_t lineno) {
  std::size_t x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InvalidInput("line " + std::to_string(lineno) + ": expected a number, got '" +
                       std::string(s) + "'");
  return x;
}

ojson source_json(const Source& s) {
  ojson j;
  j["operand"] = s.operand;
  if (s.kind == Source::Kind::vertex)
    j["vertex"] = s.vertex + 1;
  else
    j["edge"] = {s.edge.u + 1, s.edge.v + 1};
  return j;
}

ojson provenance_json(const Provenance& p) {
  ojson j;
  j["op"] = p.op;
  j["operands"] = p.operands;
  auto sources = ojson::array();
  for (const auto& per_vertex : p.sources) {
    auto arr = ojson::array();
    for (const auto& s : per_vertex) arr.push_back(source_json(s));
    sources.push_back(std::move(arr));
  }
  j["sources"] = std::move(sources);
  return j;
}

ojson names_json(const Graph& g, std::span<const VertexId> vs) {
  auto a = ojson::array();
  for (auto v : vs) a.push_back(g.name(v));
  return a;
}

ojson edges_json(const Graph& g, std::span<const Edge> es) {
  auto a = ojson::array();
  for (const auto& e : es) a.push_back(edge_name(g, e));
  return a;
}

std::string quote_dot(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join_names(const Graph& g, std::span<const VertexId> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + g.name(vs[i]);
  return out + "}";
}

std::string opt_str(const std::optional<std::size_t>& v, std::string_view missing) {
  return v ? std::to_string(*v) : std::string(missing);
}

}  // namespace

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  if (!g.label().empty()) out << "c label " << g.label() << '\n';
  if (!has_default_names(g))
    for (VertexId v = 0; v < g.order(); ++v) out << "c name " << v + 1 << ' ' << g.name(v) << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> order;
  std::size_t declared_size = 0;
  std::string label;
  std::vector<std::pair<std::size_t, std::string>> named;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto f = split_ws(line, 4);
    if (f.empty()) continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (f[0] == "c") {
      if (f.size() >= 2 && f[1] == "label") {
        auto rest = split_ws(line, 3);
        label = rest.size() == 3 ? std::string(rest[2]) : std::string();
      } else if (f.size() >= 2 && f[1] == "name") {
        if (f.size() != 4) throw InvalidInput(where() + "expected 'c name <id> <name>'");
        named.emplace_back(parse_count(f[2], lineno), std::string(f[3]));
      }
      continue;
    }
    if (f[0] == "p") {
      if (order) throw InvalidInput(where() + "duplicate 'p' line");
      auto pf = split_ws(line, 0);
      if (pf.size() != 3) throw InvalidInput(where() + "expected 'p <order> <size>'");
      order = parse_count(pf[1], lineno);
      declared_size = parse_count(pf[2], lineno);
      continue;
    }
    if (f[0] == "e") {
      if (!order) throw InvalidInput(where() + "edge before 'p' line");
      auto ef = split_ws(line, 0);
      if (ef.size() != 3) throw InvalidInput(where() + "expected 'e <u> <v>'");
      auto u = parse_count(ef[1], lineno);
      auto v = parse_count(ef[2], lineno);
      if (u < 1 || v < 1 || u > *order || v > *order)
        throw InvalidInput(where() + "vertex id out of range 1.." + std::to_string(*order));
      if (u == v) throw InvalidInput(where() + "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      continue;
    }
    throw InvalidInput(where() + "unrecognized line '" + std::string(line) + "'");
  }
  if (!order) throw InvalidInput("missing 'p <order> <size>' line");
  std::vector<std::string> names(*order);
  for (VertexId v = 0; v < *order; ++v) names[v] = Graph::default_name(v);
  for (const auto& [id, name] : named) {
    if (id < 1 || id > *order) throw InvalidInput("name for vertex id out of range: " + std::to_string(id));
    names[id - 1] = name;
  }
  Graph g(std::move(names), std::move(edges), std::move(label));
  if (g.size() != declared_size)
    throw InvalidInput("'p' line declares " + std::to_string(declared_size) + " edges, found " +
                       std::to_string(g.size()));
  return g;
}

std::string to_json(const Graph& g, const Provenance* provenance) {
  ojson j;
  j["label"] = g.label();
  auto vs = ojson::array();
  for (VertexId v = 0; v < g.order(); ++v) vs.push_back(v + 1);
  j["vertices"] = std::move(vs);
  j["names"] = g.names();
  auto es = ojson::array();
  for (const auto& e : g.edges()) es.push_back({e.u + 1, e.v + 1});
  j["edges"] = std::move(es);
  if (provenance) j["provenance"] = provenance_json(*provenance);
  return dump(j);
}

Graph parse_graph_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InvalidInput("graph JSON needs \"vertices\" and \"edges\"");
  try {
    const auto& vs = j.at("vertices");
    const auto n = vs.size();
    for (std::size_t i = 0; i < n; ++i)
      if (vs[i].get<std::size_t>() != i + 1)
        throw InvalidInput("\"vertices\" must be 1..n in order");
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = j.at("names").get<std::vector<std::string>>();
      if (names.size() != n) throw InvalidInput("\"names\" length differs from vertex count");
    } else {
      for (VertexId v = 0; v < n; ++v) names.push_back(Graph::default_name(v));
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a [u, v] pair");
      auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
      if (u < 1 || v < 1 || u > n || v > n)
        throw InvalidInput("edge endpoint out of range 1.." + std::to_string(n));
      if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    }
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
    return Graph(std::move(names), std::move(edges), std::move(label));
  } catch (const ojson::exception& e) {
    throw InvalidInput(std::string("bad graph JSON: ") + e.what());
  }
}

std::string to_dot(const Graph& g, const SetLabeling* labeling, const Provenance* provenance) {
  std::ostringstream out;
  if (provenance) {
    out << "// op: " << provenance->op;
    for (const auto& o : provenance->operands) out << " [" << o << "]";
    out << '\n';
  }
  out << "graph " << quote_dot(g.label().empty() ? "G" : g.label()) << " {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "  " << quote_dot(g.name(v));
    if (labeling) {
      const auto& s = labeling->at(v);
      out << " [label=" << quote_dot(g.name(v) + "\\n" + to_string(s));
      if (!s.is_singleton()) out << ", shape=box";
      out << "]";
    }
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << quote_dot(g.name(e.u)) << " -- " << quote_dot(g.name(e.v));
    if (labeling) out << " [label=" << quote_dot(to_string(labeling->edge_label(e))) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string write_graph(const Graph& g, GraphFormat format, const Provenance* provenance) {
  switch (format) {
    case GraphFormat::edge_list: return to_edge_list(g);
    case GraphFormat::json: return to_json(g, provenance);
    case GraphFormat::dot: return to_dot(g, nullptr, provenance);
  }
  return {};
}

std::string labeling_to_json(const SetLabeling& f, const Graph& g) {
  ojson j = ojson::object();
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto& s = f.at(v);
    j[g.name(v)] = std::vector<IntSet::value_type>(s.begin(), s.end());
  }
  return dump(j);
}

SetLabeling parse_labeling_json(std::string_view text, const Graph& g) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("labeling JSON must map vertex names to integer arrays");
  SetLabeling f(g.order());
  for (const auto& [name, value] : j.items()) {
    auto v = g.require(name);
    if (!value.is_array() || value.empty())
      throw InvalidInput("set-label for '" + name + "' must be a non-empty integer array");
    std::vector<IntSet::value_type> xs;
    for (const auto& x : value) {
      if (!x.is_number_unsigned())
        throw InvalidInput("set-label for '" + name + "' must hold non-negative integers");
      xs.push_back(x.get<IntSet::value_type>());
    }
    f.set(v, IntSet(std::move(xs)));
  }
  for (VertexId v = 0; v < g.order(); ++v)
    if (!f.has(v)) throw InvalidInput("missing set-label for vertex '" + g.name(v) + "'");
  return f;
}

std::string to_json(const SparingResult& r, const Graph& g) {
  ojson j;
  j["graph"] = g.label();
  j["order"] = g.order();
  j["size"] = g.size();
  j["sparing_number"] = r.value;
  j["exact"] = r.exact;
  j["nonmono_vertices"] = names_json(g, r.witness_nonmono);
  j["mono_edges"] = edges_json(g, r.witness_mono_edges);
  j["explored"] = r.explored;
  return dump(j);
}

std::string to_markdown(const SparingResult& r, const Graph& g) {
  std::ostringstream out;
  out << "| graph | n | m | sparing number | exact | non-mono vertices | mono edges |\n"
      << "|---|---|---|---|---|---|---|\n"
      << "| " << (g.label().empty() ? "-" : g.label()) << " | " << g.order() << " | " << g.size()
      << " | " << r.value << (r.exact ? "" : " (upper bound)") << " | "
      << (r.exact ? "yes" : "no") << " | " << join_names(g, r.witness_nonmono) << " | ";
  for (std::size_t i = 0; i < r.witness_mono_edges.size(); ++i)
    out << (i ? ", " : "") << edge_name(g, r.witness_mono_edges[i]);
  out << " |\n";
  return out.str();
}

std::string to_json(const LabelingReport& r, const Graph& g, const SetLabeling& f) {
  ojson j;
  j["graph"] = g.label();
  j["is_iasi"] = r.is_iasi;
  j["is_wiasi"] = r.is_wiasi;
  j["is_siasi"] = r.is_siasi;
  j["mono_vertices"] = r.mono_vertex_count;
  j["mono_edges"] = r.mono_edge_count;
  j["uniformity"] = r.uniformity ? ojson(*r.uniformity) : ojson(nullptr);
  auto vl = ojson::object();
  for (VertexId v = 0; v < g.order(); ++v)
    if (f.has(v)) vl[g.name(v)] = to_string(f.at(v));
  j["vertex_labels"] = std::move(vl);
  auto el = ojson::object();
  for (const auto& e : g.edges())
    if (f.has(e.u) && f.has(e.v)) el[edge_name(g, e)] = to_string(f.edge_label(e));
  j["edge_labels"] = std::move(el);
  auto vs = ojson::array();
  for (const auto& v : r.violations) {
    ojson x;
    x["kind"] = std::string(to_string(v.kind));
    x["vertices"] = names_json(g, v.vertices);
    x["edges"] = edges_json(g, v.edges);
    vs.push_back(std::move(x));
  }
  j["violations"] = std::move(vs);
  return dump(j);
}

std::string to_markdown(const LabelingReport& r, const Graph& g) {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "| graph | IASI | weak | strong | mono vertices | mono edges | uniform |\n"
      << "|---|---|---|---|---|---|---|\n"
      << "| " << (g.label().empty() ? "-" : g.label()) << " | " << yn(r.is_iasi) << " | "
      << yn(r.is_wiasi) << " | " << yn(r.is_siasi) << " | " << r.mono_vertex_count << " | "
      << r.mono_edge_count << " | " << opt_str(r.uniformity, "-") << " |\n";
  if (!r.violations.empty()) {
    out << "\n| violation | vertices | edges |\n|---|---|---|\n";
    for (const auto& v : r.violations) {
      out << "| " << to_string(v.kind) << " | " << join_names(g, v.vertices) << " | ";
      for (std::size_t i = 0; i < v.edges.size(); ++i)
        out << (i ? ", " : "") << edge_name(g, v.edges[i]);
      out << " |\n";
    }
  }
  return out.str();
}

std::string to_json(const GraphParams& p) {
  constexpr std::string_view kCapped = "unsupported at this size";
  auto opt = [&](const std::optional<std::size_t>& v) { return v ? ojson(*v) : ojson(kCapped); };
  ojson j;
  j["order"] = p.order;
  j["size"] = p.size;
  j["min_degree"] = p.min_degree;
  j["max_degree"] = p.max_degree;
  j["matching_number"] = p.matching_number;
  j["vertex_cover_number"] = opt(p.vertex_cover_number);
  j["independence_number"] = opt(p.independence_number);
  j["chromatic_number"] = opt(p.chromatic_number);
  j["diameter"] = p.diameter ? ojson(*p.diameter)
                             : ojson(p.connected ? kCapped : std::string_view("infinite"));
  j["connected"] = p.connected;
  j["bipartite"] = p.is_bipartite;
  j["eulerian"] = p.is_eulerian;
  j["has_isolated_vertices"] = p.has_isolated_vertices;
  return dump(j);
}

std::string to_markdown(const GraphParams& p) {
  constexpr std::string_view kCapped = "unsupported at this size";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "| parameter | value |\n|---|---|\n"
      << "| order | " << p.order << " |\n"
      << "| size | " << p.size << " |\n"
      << "| min degree | " << p.min_degree << " |\n"
      << "| max degree | " << p.max_degree << " |\n"
      << "| matching number | " << p.matching_number << " |\n"
      << "| vertex cover number | " << opt_str(p.vertex_cover_number, kCapped) << " |\n"
      << "| independence number | " << opt_str(p.independence_number, kCapped) << " |\n"
      << "| chromatic number | " << opt_str(p.chromatic_number, kCapped) << " |\n"
      << "| diameter | " << opt_str(p.diameter, p.connected ? kCapped : "infinite") << " |\n"
      << "| connected | " << yn(p.connected) << " |\n"
      << "| bipartite | " << yn(p.is_bipartite) << " |\n"
      << "| eulerian | " << yn(p.is_eulerian) << " |\n"
      << "| isolated vertices | " << yn(p.has_isolated_vertices) << " |\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << contents;
}

Graph load_graph(const std::filesystem::path& path) {
  auto text = read_file(path);
  return path.extension() == ".json" ? parse_graph_json(text) : parse_edge_list(text);
}

}  // namespace iasi
