#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iasi/params.hpp"

namespace iasi {

enum class ClaimKind { exact_formula, lower_bound, parity, identity_relation, admissibility };

/// Per-point outcome. A claim's overall verdict is the worst point status in
/// the order MISMATCH > NON_INTEGER > ORACLE_CAP > MATCH > UNSUPPORTED, so
/// points outside a claim's hypotheses never hide a MATCH.
enum class ClaimStatus { match, mismatch, non_integer, unsupported, oracle_cap };

std::string_view to_string(ClaimKind k);
std::string_view to_string(ClaimStatus s);
std::optional<ClaimStatus> status_from_string(std::string_view s);

/// Named integer parameters in the claim's axis order.
using ParamPoint = std::vector<std::pair<std::string, long>>;

struct Axis {
  std::string name;
  std::vector<long> values;
};

struct ClaimReport {
  std::string claim_id;
  ParamPoint params;
  std::string graph;           // expression that rebuilds the graph
  std::string formula_value;   // claimed value ("15/2", "true", ...)
  std::string oracle_value;    // independently computed value
  ClaimStatus status = ClaimStatus::unsupported;
  std::string witness;
  std::string note;
};

struct EvalContext {
  std::size_t exact_cap = kDefaultExactCap;
};

struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::exact_formula;
  std::string statement;       // the claimed relation, in formula notation
  std::vector<Axis> axes;      // default grid
  std::function<bool(const ParamPoint&)> applicable;
  /// Fills graph / values / status / witness / note of a report whose id and
  /// params are already set.
  std::function<void(const ParamPoint&, const EvalContext&, ClaimReport&)> run;
};

const std::vector<Claim>& claim_registry();
/// Throws InvalidInput for unknown ids.
const Claim& find_claim(std::string_view id);

/// Evaluates one point. Throws InvalidInput for unknown ids, missing or extra
/// parameters, and points outside the claim's domain. Oracle cap overruns
/// become ORACLE_CAP reports.
ClaimReport evaluate(std::string_view id, const ParamPoint& params,
                     const EvalContext& ctx = {});

/// Axis overrides: axis name -> values. Axes a claim does not have are ignored.
using Grid = std::map<std::string, std::vector<long>>;

/// Parses "n=3..6" or "n=3,5,9" (ranges and values may be mixed) into `grid`.
void parse_grid_axis(std::string_view text, Grid& grid);

/// Every in-domain point of the claim's grid (defaults overridden by `grid`),
/// in lexicographic axis order.
std::vector<ClaimReport> sweep(std::string_view id, const Grid& grid = {},
                               const EvalContext& ctx = {});

ClaimStatus verdict(std::span<const ClaimReport> reports);

struct ClaimSummary {
  std::string id;
  ClaimKind kind = ClaimKind::exact_formula;
  std::string statement;
  ClaimStatus verdict = ClaimStatus::unsupported;
  std::map<ClaimStatus, std::size_t> counts;
  std::vector<ClaimReport> reports;
};

struct StatusTable {
  std::vector<ClaimSummary> claims;
};

/// Sweeps the selected claims (all when `ids` is empty) on up to `threads`
/// workers (0 = hardware concurrency). Output order is registry order.
StatusTable status_table(const Grid& grid = {}, const EvalContext& ctx = {},
                         std::span<const std::string> ids = {}, unsigned threads = 0);

std::string to_markdown(const StatusTable& t);
std::string to_json(const StatusTable& t);

/// Differences between `t` and a previously written JSON table, one line per
/// changed claim verdict, point status or value. Only claims present in `t`
/// are compared; with `partial` (a narrowed grid) only the points present in
/// `t` are. Throws InvalidInput on malformed JSON.
std::vector<std::string> compare_to_golden(const StatusTable& t, std::string_view golden_json,
                                           bool partial = false);

}  // namespace iasi
