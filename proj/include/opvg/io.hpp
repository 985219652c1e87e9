#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "opvg/geometry.hpp"
#include "opvg/graph.hpp"

namespace opvg {

enum class GraphFormat { Graph6, EdgeList, Json };

std::optional<GraphFormat> parse_format_name(std::string_view name);
/// By extension: .g6, .json, anything else is an edge list.
GraphFormat format_for_path(const std::filesystem::path& path);

// All parsers throw Error(ParseError) on malformed input.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);  // encodes in index order

/// Lines "u v"; a single token declares an isolated vertex; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
Graph read_graph(const std::filesystem::path& path, std::optional<GraphFormat> format = {});

nlohmann::json drawing_to_json(const SegmentDrawing& d);
/// Rejects non-axis-parallel segments with Error(NonAxisParallel).
SegmentDrawing drawing_from_json(const nlohmann::json& j);

/// Presentation only: collinear overlapping segments are nudged apart.
std::string drawing_to_svg(const SegmentDrawing& d);

}  // namespace opvg
