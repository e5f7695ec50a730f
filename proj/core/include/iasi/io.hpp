#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"
#include "iasi/ops.hpp"
#include "iasi/params.hpp"
#include "iasi/sparing.hpp"

namespace iasi {

enum class GraphFormat { edge_list, json, dot };

/// Edge-list text:
///
///   p <order> <size>
///   c label <text>            (optional)
///   c name <id> <name>        (one per vertex, only for non-default names)
///   e <u> <v>                 (1-based ids, one line per edge)
///
/// Other "c" lines are comments.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// {"label": ..., "vertices": [1..n], "names": [...], "edges": [[u, v], ...],
///  "provenance": {...}}; ids are 1-based, provenance is written only.
std::string to_json(const Graph& g, const Provenance* provenance = nullptr);
Graph parse_graph_json(std::string_view text);

/// Graphviz; with a labeling, nodes show their set-labels (non-mono vertices
/// boxed) and edges their sumsets.
std::string to_dot(const Graph& g, const SetLabeling* labeling = nullptr,
                   const Provenance* provenance = nullptr);

std::string write_graph(const Graph& g, GraphFormat format,
                        const Provenance* provenance = nullptr);

/// Labeling file: one JSON object mapping vertex name -> sorted int array.
std::string labeling_to_json(const SetLabeling& f, const Graph& g);
SetLabeling parse_labeling_json(std::string_view text, const Graph& g);

std::string to_json(const SparingResult& r, const Graph& g);
std::string to_markdown(const SparingResult& r, const Graph& g);
std::string to_json(const LabelingReport& r, const Graph& g, const SetLabeling& f);
std::string to_markdown(const LabelingReport& r, const Graph& g);
std::string to_json(const GraphParams& p);
std::string to_markdown(const GraphParams& p);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);
/// ".json" files as JSON, anything else as edge-list.
Graph load_graph(const std::filesystem::path& path);

}  // namespace iasi
