#include "iasi/claims.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <sstream>
#include <thread>

#include "iasi/error.hpp"
#include "json.hpp"

namespace iasi {
namespace {

using ojson = nlohmann::ordered_json;

constexpr ClaimStatus kStatuses[] = {ClaimStatus::match, ClaimStatus::mismatch,
                                     ClaimStatus::non_integer, ClaimStatus::unsupported,
                                     ClaimStatus::oracle_cap};

int severity(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::mismatch: return 4;
    case ClaimStatus::non_integer: return 3;
    case ClaimStatus::oracle_cap: return 2;
    case ClaimStatus::match: return 1;
    case ClaimStatus::unsupported: return 0;
  }
  return 0;
}

std::string params_str(const ParamPoint& p) {
  std::string out;
  for (const auto& [k, v] : p) out += (out.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  return out;
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out.empty() ? "-" : out;
}

long parse_long(std::string_view s, std::string_view ctx) {
  long x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InvalidInput("grid: bad integer '" + std::string(s) + "' in '" + std::string(ctx) + "'");
  return x;
}

std::vector<ParamPoint> grid_points(const Claim& c, const Grid& grid) {
  std::vector<const std::vector<long>*> values;
  for (const auto& a : c.axes) {
    auto it = grid.find(a.name);
    values.push_back(it != grid.end() ? &it->second : &a.values);
  }
  std::vector<ParamPoint> out;
  ParamPoint cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == c.axes.size()) {
      if (!c.applicable || c.applicable(cur)) out.push_back(cur);
      return;
    }
    for (long v : *values[k]) {
      cur.emplace_back(c.axes[k].name, v);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ClaimReport run_point(const Claim& c, const ParamPoint& p, const EvalContext& ctx) {
  ClaimReport r;
  r.claim_id = c.id;
  r.params = p;
  try {
    c.run(p, ctx, r);
  } catch (const CapExceeded& e) {
    r.status = ClaimStatus::oracle_cap;
    r.note = e.what();
  }
  return r;
}

ClaimSummary summarize(const Claim& c, std::vector<ClaimReport> reports) {
  ClaimSummary s;
  s.id = c.id;
  s.kind = c.kind;
  s.statement = c.statement;
  for (auto st : kStatuses) s.counts[st] = 0;
  for (const auto& r : reports) ++s.counts[r.status];
  s.verdict = verdict(reports);
  s.reports = std::move(reports);
  return s;
}

ojson report_json(const ClaimReport& r) {
  ojson j;
  auto p = ojson::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  j["params"] = std::move(p);
  j["graph"] = r.graph;
  j["formula"] = r.formula_value;
  j["oracle"] = r.oracle_value;
  j["status"] = std::string(to_string(r.status));
  j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::vector<std::string> golden_drift(const StatusTable& t, const ojson& golden, bool partial) {
  std::map<std::string, const ojson*> by_id;
  for (const auto& c : golden.at("claims")) by_id[c.value("id", "")] = &c;

  std::vector<std::string> drift;
  for (const auto& s : t.claims) {
    auto it = by_id.find(s.id);
    if (it == by_id.end()) {
      drift.push_back(s.id + ": not in golden table");
      continue;
    }
    const auto& g = *it->second;
    if (!partial && g.value("verdict", "") != to_string(s.verdict))
      drift.push_back(s.id + ": verdict " + g.value("verdict", "?") + " -> " +
                      std::string(to_string(s.verdict)));
    std::map<std::string, const ojson*> gpoints;
    static const ojson kNoPoints = ojson::array();
    const auto& points = g.contains("points") ? g.at("points") : kNoPoints;
    for (const auto& p : points) gpoints[p.at("params").dump()] = &p;
    std::size_t seen = 0;
    for (const auto& r : s.reports) {
      auto now = report_json(r);
      auto key = now["params"].dump();
      auto pit = gpoints.find(key);
      if (pit == gpoints.end()) {
        drift.push_back(s.id + " " + key + ": new point");
        continue;
      }
      ++seen;
      for (const char* field : {"status", "formula", "oracle"}) {
        auto before = (*pit->second).value(field, "");
        auto after = now[field].get<std::string>();
        if (before != after)
          drift.push_back(s.id + " " + key + ": " + field + " " + before + " -> " + after);
      }
    }
    if (!partial && seen != gpoints.size())
      drift.push_back(s.id + ": " + std::to_string(gpoints.size() - seen) + " golden point(s) no longer evaluated");
  }
  return drift;
}

}  // namespace

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::exact_formula: return "exact_formula";
    case ClaimKind::lower_bound: return "lower_bound";
    case ClaimKind::parity: return "parity";
    case ClaimKind::identity_relation: return "identity_relation";
    case ClaimKind::admissibility: return "admissibility";
  }
  return "?";
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::match: return "MATCH";
    case ClaimStatus::mismatch: return "MISMATCH";
    case ClaimStatus::non_integer: return "NON_INTEGER";
    case ClaimStatus::unsupported: return "UNSUPPORTED";
    case ClaimStatus::oracle_cap: return "ORACLE_CAP";
  }
  return "?";
}

std::optional<ClaimStatus> status_from_string(std::string_view s) {
  for (auto st : kStatuses)
    if (to_string(st) == s) return st;
  return std::nullopt;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw InvalidInput("unknown claim '" + std::string(id) + "'");
}

ClaimReport evaluate(std::string_view id, const ParamPoint& params, const EvalContext& ctx) {
  const auto& c = find_claim(id);
  ParamPoint ordered;
  for (const auto& a : c.axes) {
    auto it = std::find_if(params.begin(), params.end(), [&](const auto& kv) { return kv.first == a.name; });
    if (it == params.end())
      throw InvalidInput(c.id + ": missing parameter '" + a.name + "'");
    ordered.push_back(*it);
  }
  if (params.size() != ordered.size())
    throw InvalidInput(c.id + ": unexpected parameters in (" + params_str(params) + ")");
  if (c.applicable && !c.applicable(ordered))
    throw InvalidInput(c.id + ": parameters outside the claim's domain (" + params_str(ordered) + ")");
  return run_point(c, ordered, ctx);
}

void parse_grid_axis(std::string_view text, Grid& grid) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw InvalidInput("grid: expected axis=values, got '" + std::string(text) + "'");
  std::string axis(text.substr(0, eq));
  std::vector<long> values;
  auto rest = text.substr(eq + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      long lo = parse_long(item.substr(0, dots), text), hi = parse_long(item.substr(dots + 2), text);
      if (lo > hi) throw InvalidInput("grid: empty range in '" + std::string(text) + "'");
      for (long v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      values.push_back(parse_long(item, text));
    }
  }
  if (values.empty()) throw InvalidInput("grid: no values for axis '" + axis + "'");
  grid[axis] = std::move(values);
}

std::vector<ClaimReport> sweep(std::string_view id, const Grid& grid, const EvalContext& ctx) {
  const auto& c = find_claim(id);
  std::vector<ClaimReport> out;
  for (const auto& p : grid_points(c, grid)) out.push_back(run_point(c, p, ctx));
  return out;
}

ClaimStatus verdict(std::span<const ClaimReport> reports) {
  auto worst = ClaimStatus::unsupported;
  for (const auto& r : reports)
    if (severity(r.status) > severity(worst)) worst = r.status;
  return worst;
}

StatusTable status_table(const Grid& grid, const EvalContext& ctx, std::span<const std::string> ids,
                         unsigned threads) {
  std::vector<const Claim*> selected;
  if (ids.empty()) {
    for (const auto& c : claim_registry()) selected.push_back(&c);
  } else {
    for (const auto& id : ids) selected.push_back(&find_claim(id));
  }

  // Work items are (claim, point); results land in fixed slots so the merge
  // order never depends on scheduling.
  std::vector<std::vector<ParamPoint>> points;
  std::vector<std::pair<std::size_t, std::size_t>> items;
  for (std::size_t c = 0; c < selected.size(); ++c) {
    points.push_back(grid_points(*selected[c], grid));
    for (std::size_t k = 0; k < points.back().size(); ++k) items.emplace_back(c, k);
  }
  std::vector<std::vector<ClaimReport>> results(selected.size());
  for (std::size_t c = 0; c < selected.size(); ++c) results[c].resize(points[c].size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, items.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (auto i = next++; i < items.size(); i = next++) {
      auto [c, k] = items[i];
      try {
        results[c][k] = run_point(*selected[c], points[c][k], ctx);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  StatusTable table;
  for (std::size_t c = 0; c < selected.size(); ++c)
    table.claims.push_back(summarize(*selected[c], std::move(results[c])));
  return table;
}

std::string to_markdown(const StatusTable& t) {
  std::ostringstream out;
  out << "# Claim status\n\n"
      << "| claim | kind | verdict | points | MATCH | MISMATCH | NON_INTEGER | UNSUPPORTED | ORACLE_CAP |"
         " statement |\n"
      << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& s : t.claims) {
    out << "| [" << s.id << "](#" << s.id << ") | " << to_string(s.kind) << " | "
        << to_string(s.verdict) << " | " << s.reports.size();
    for (auto st : kStatuses) out << " | " << s.counts.at(st);
    out << " | " << md_cell(s.statement) << " |\n";
  }
  for (const auto& s : t.claims) {
    out << "\n## " << s.id << "\n\n" << md_cell(s.statement) << "\n\n"
        << "| params | graph | formula | oracle | status | witness | note |\n"
        << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : s.reports)
      out << "| " << md_cell(params_str(r.params)) << " | " << md_cell(r.graph) << " | "
          << md_cell(r.formula_value) << " | " << md_cell(r.oracle_value) << " | "
          << to_string(r.status) << " | " << md_cell(r.witness) << " | " << md_cell(r.note) << " |\n";
  }
  return out.str();
}

std::string to_json(const StatusTable& t) {
  auto claims = ojson::array();
  for (const auto& s : t.claims) {
    ojson j;
    j["id"] = s.id;
    j["kind"] = std::string(to_string(s.kind));
    j["statement"] = s.statement;
    j["verdict"] = std::string(to_string(s.verdict));
    auto counts = ojson::object();
    for (auto st : kStatuses) counts[std::string(to_string(st))] = s.counts.at(st);
    j["counts"] = std::move(counts);
    auto pts = ojson::array();
    for (const auto& r : s.reports) pts.push_back(report_json(r));
    j["points"] = std::move(pts);
    claims.push_back(std::move(j));
  }
  ojson doc;
  doc["claims"] = std::move(claims);
  return doc.dump(2) + "\n";
}

std::vector<std::string> compare_to_golden(const StatusTable& t, std::string_view golden_json,
                                           bool partial) {
  ojson golden;
  try {
    golden = ojson::parse(golden_json);
  } catch (const ojson::parse_error& e) {
    throw InvalidInput(std::string("golden table: malformed JSON: ") + e.what());
  }
  if (!golden.contains("claims") || !golden["claims"].is_array())
    throw InvalidInput("golden table: missing \"claims\" array");
  try {
    return golden_drift(t, golden, partial);
  } catch (const ojson::exception& e) {
    throw InvalidInput(std::string("golden table: unexpected layout: ") + e.what());
  }
}

}  // namespace iasi
