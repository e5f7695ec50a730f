#include "iasi/families.hpp"

#include <array>
#include <charconv>
#include <random>

#include "iasi/error.hpp"
#include "iasi/ops.hpp"

namespace iasi {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {Family::path, "path", 1},
    {Family::cycle, "cycle", 1},
    {Family::complete, "complete", 1},
    {Family::complete_bipartite, "complete_bipartite", 2},
    {Family::wheel, "wheel", 1},
    {Family::double_wheel, "double_wheel", 1},
    {Family::m_wheel, "m_wheel", 2},
    {Family::fan, "fan", 1},
    {Family::gear, "gear", 1},
    {Family::complete_sun, "complete_sun", 1},
    {Family::complete_split, "complete_split", 2},
    {Family::windmill, "windmill", 2},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw InvalidInput("unknown family");
}

void require(bool ok, const FamilySpec& spec, const char* constraint) {
  if (!ok) {
    throw InvalidInput(to_string(spec) + ": parameter constraint violated: " +
                       constraint);
  }
}

std::vector<std::string> seq_names(const std::string& stem, long n) {
  std::vector<std::string> names;
  for (long i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

Graph make_path(long n) {
  std::vector<Edge> edges;
  for (long i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph make_cycle(long n) {
  std::vector<Edge> edges;
  for (long i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph make_complete(long n) {
  std::vector<Edge> edges;
  for (long a = 0; a < n; ++a) {
    for (long b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph hub() { return Graph({"hub"}, {}); }

Graph make_m_wheel(long m, long n) {
  Graph rims = rename(make_cycle(n), "c1:");
  for (long j = 2; j <= m; ++j) {
    rims = graph_union(rims, rename(make_cycle(n), "c" + std::to_string(j) + ":")).graph;
  }
  return join(hub(), rims).graph;
}

Graph make_gear(long n) {
  // hub = 0, rim v_i = i, subdivision w_i = n + i
  std::vector<std::string> names{"hub"};
  auto rim = seq_names("v", n);
  auto sub = seq_names("w", n);
  names.insert(names.end(), rim.begin(), rim.end());
  names.insert(names.end(), sub.begin(), sub.end());
  std::vector<Edge> edges;
  for (long i = 1; i <= n; ++i) {
    const long next = i % n + 1;
    edges.emplace_back(0, i);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, next);
  }
  return Graph(std::move(names), std::move(edges));
}

Graph make_sun(long n) {
  auto names = seq_names("u", n);
  auto ws = seq_names("w", n);
  names.insert(names.end(), ws.begin(), ws.end());
  std::vector<Edge> edges;
  for (long a = 0; a < n; ++a) {
    for (long b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  for (long j = 0; j < n; ++j) {
    edges.emplace_back(n + j, j);
    edges.emplace_back(n + j, (j + 1) % n);
  }
  return Graph(std::move(names), std::move(edges));
}

Graph make_split(long r, long s) {
  auto names = seq_names("k", r);
  auto ss = seq_names("s", s);
  names.insert(names.end(), ss.begin(), ss.end());
  std::vector<Edge> edges;
  for (long a = 0; a < r; ++a) {
    for (long b = a + 1; b < r; ++b) edges.emplace_back(a, b);
    for (long j = 0; j < s; ++j) edges.emplace_back(a, r + j);
  }
  return Graph(std::move(names), std::move(edges));
}

Graph make_windmill(long n, long k) {
  std::vector<std::string> names{"center"};
  std::vector<Edge> edges;
  for (long j = 1; j <= k; ++j) {
    std::vector<VertexId> blade{0};
    for (long i = 1; i < n; ++i) {
      blade.push_back(static_cast<VertexId>(names.size()));
      names.push_back("b" + std::to_string(j) + "_" + std::to_string(i));
    }
    for (std::size_t a = 0; a < blade.size(); ++a) {
      for (std::size_t b = a + 1; b < blade.size(); ++b) {
        edges.emplace_back(blade[a], blade[b]);
      }
    }
  }
  return Graph(std::move(names), std::move(edges));
}

Graph make_complete_bipartite(long m, long n) {
  auto names = seq_names("a", m);
  auto bs = seq_names("b", n);
  names.insert(names.end(), bs.begin(), bs.end());
  std::vector<Edge> edges;
  for (long a = 0; a < m; ++a) {
    for (long b = 0; b < n; ++b) edges.emplace_back(a, m + b);
  }
  return Graph(std::move(names), std::move(edges));
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::size_t family_arity(Family f) { return info(f).arity; }

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "sun") return Family::complete_sun;
  if (name == "split") return Family::complete_split;
  for (const auto& fi : kFamilies) {
    if (fi.name == name) return fi.family;
  }
  return std::nullopt;
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  auto family = family_from_name(name);
  if (!family) throw InvalidInput("unknown family '" + std::string(name) + "'");
  FamilySpec spec{*family, {}};
  if (colon == std::string_view::npos) {
    throw InvalidInput("family '" + std::string(name) + "' needs parameters");
  }
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidInput("bad family parameter '" + std::string(tok) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string s(family_name(spec.family));
  s += "(";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spec.params[i]);
  }
  return s + ")";
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (p.size() != family_arity(spec.family)) {
    throw InvalidInput(std::string(family_name(spec.family)) + " takes " +
                       std::to_string(family_arity(spec.family)) +
                       " parameter(s), got " + std::to_string(p.size()));
  }
  switch (spec.family) {
    case Family::path: require(p[0] >= 1, spec, "n >= 1"); break;
    case Family::cycle: require(p[0] >= 3, spec, "n >= 3"); break;
    case Family::complete: require(p[0] >= 1, spec, "n >= 1"); break;
    case Family::complete_bipartite:
      require(p[0] >= 1 && p[1] >= 1, spec, "m >= 1 and n >= 1");
      break;
    case Family::wheel: require(p[0] >= 3, spec, "rim n >= 3"); break;
    case Family::double_wheel: require(p[0] >= 3, spec, "rim n >= 3"); break;
    case Family::m_wheel:
      require(p[0] >= 1 && p[1] >= 3, spec, "m >= 1 and rim n >= 3");
      break;
    case Family::fan: require(p[0] >= 1, spec, "n >= 1"); break;
    case Family::gear: require(p[0] >= 3, spec, "n >= 3"); break;
    case Family::complete_sun: require(p[0] >= 3, spec, "n >= 3"); break;
    case Family::complete_split:
      require(p[0] >= 1 && p[1] >= 1, spec, "r >= 1 and s >= 1");
      break;
    case Family::windmill:
      require(p[0] >= 2 && p[1] >= 2, spec, "n >= 2 and k >= 2");
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  Graph g;
  switch (spec.family) {
    case Family::path: g = make_path(p[0]); break;
    case Family::cycle: g = make_cycle(p[0]); break;
    case Family::complete: g = make_complete(p[0]); break;
    case Family::complete_bipartite: g = make_complete_bipartite(p[0], p[1]); break;
    case Family::wheel: g = join(hub(), make_cycle(p[0])).graph; break;
    case Family::double_wheel: g = make_m_wheel(2, p[0]); break;
    case Family::m_wheel: g = make_m_wheel(p[0], p[1]); break;
    case Family::fan: g = join(hub(), make_path(p[0])).graph; break;
    case Family::gear: g = make_gear(p[0]); break;
    case Family::complete_sun: g = make_sun(p[0]); break;
    case Family::complete_split: g = make_split(p[0], p[1]); break;
    case Family::windmill: g = make_windmill(p[0], p[1]); break;
  }
  return g.with_label(to_string(spec));
}

Graph generate(Family family, std::vector<long> params) {
  return generate(FamilySpec{family, std::move(params)});
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must be in [0,1]");
  std::mt19937_64 rng(seed);
  // Threshold comparison on raw engine output keeps the corpus identical
  // across standard libraries (distributions are implementation-defined).
  const auto threshold = static_cast<std::uint64_t>(
      static_cast<long double>(p) * 18446744073709551615.0L);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto draw = rng();
      if (p >= 1.0 || draw < threshold) {
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
    }
  }
  std::string label = "gnp(" + std::to_string(n) + "," + std::to_string(p) +
                      "," + std::to_string(seed) + ")";
  return Graph(n, std::move(edges), std::move(label));
}

}  // namespace iasi
