#pragma once

#include <functional>
#include <istream>
#include <string>

#include <json.hpp>

#include "ksieve/graph.hpp"

namespace ksieve {

/// Bumped whenever a file layout below changes.
inline constexpr const char* format_version = "1.0";

// Graph JSON: {"n": int, "edges": [[u,v], ...]} with u < v in lexicographic
// order on output. Input edges may come in either orientation and any order.
nlohmann::json graph_to_json(const Graph& g);
/// Throws FormatError for anything that is not a valid simple graph.
Graph graph_from_json(const nlohmann::json& j);
Graph read_graph(std::istream& in);
std::string write_graph(const Graph& g);

// DOT export. Both hooks are optional; an empty return means no attributes.
struct DotStyle {
    std::function<std::string(Vertex)> vertex_label;
    std::function<std::string(const Edge&)> edge_attributes;
    std::string graph_name = "G";
};

std::string to_dot(const Graph& g, const DotStyle& style = {});

/// JSON parse of a whole stream, FormatError on syntax errors.
nlohmann::json read_json(std::istream& in, const std::string& what);

} // namespace ksieve
