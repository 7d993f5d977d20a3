#include "ksieve/io.hpp"

#include <iterator>
#include <sstream>
#include <vector>

#include "ksieve/errors.hpp"

namespace ksieve {

using nlohmann::json;

json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw FormatError("graph JSON must be an object with \"n\" and \"edges\"");
    const json& n = j.at("n");
    if (!n.is_number_unsigned() || n.get<std::size_t>() < 1)
        throw FormatError("graph JSON: \"n\" must be a positive integer");
    const json& list = j.at("edges");
    if (!list.is_array())
        throw FormatError("graph JSON: \"edges\" must be an array");

    std::vector<Edge> edges;
    edges.reserve(list.size());
    for (const json& pair : list) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned())
            throw FormatError("graph JSON: each edge must be a pair of non-negative integers");
        edges.push_back({pair[0].get<Vertex>(), pair[1].get<Vertex>()});
    }
    try {
        return Graph(n.get<std::size_t>(), edges);
    }
    catch (const DomainError& e) {
        throw FormatError(std::string("graph JSON: ") + e.what());
    }
}

json read_json(std::istream& in, const std::string& what)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw FormatError(what + ": " + e.what());
    }
}

Graph read_graph(std::istream& in)
{
    return graph_from_json(read_json(in, "graph JSON"));
}

std::string write_graph(const Graph& g)
{
    return graph_to_json(g).dump() + "\n";
}

std::string to_dot(const Graph& g, const DotStyle& style)
{
    std::ostringstream out;
    out << "graph " << style.graph_name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (style.vertex_label) {
            std::string label = style.vertex_label(v);
            if (!label.empty())
                out << " [label=\"" << label << "\"]";
        }
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (style.edge_attributes) {
            std::string attrs = style.edge_attributes(e);
            if (!attrs.empty())
                out << " [" << attrs << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace ksieve
