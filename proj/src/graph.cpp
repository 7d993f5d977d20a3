#include "ksieve/graph.hpp"

#include <algorithm>
#include <string>

#include "ksieve/errors.hpp"

namespace ksieve {

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n))
{
    if (n == 0)
        throw DomainError("graph must have at least one vertex");
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n)
{
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw DomainError("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n)
            throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} out of range for " + std::to_string(n) + " vertices");
        edges_.push_back(Edge::canonical(e.u, e.v));
    }
    check_and_link();
}

void Graph::check_and_link()
{
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw DomainError("repeated edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    for (const Edge& e : edges_) {
        adjacency_[e.u].set(e.v);
        adjacency_[e.v].set(e.u);
    }
}

std::vector<std::size_t> Graph::degrees() const
{
    std::vector<std::size_t> out(order());
    for (Vertex v = 0; v < order(); ++v)
        out[v] = degree(v);
    return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const
{
    std::vector<Edge> all = edges_;
    for (const Edge& e : extra) {
        if (e.u < order() && e.v < order() && e.u != e.v && adjacent(e.u, e.v))
            continue;
        all.push_back(e);
    }
    return Graph(order(), all);
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::size_t> index(order(), order());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        index[sorted[i]] = i;

    std::vector<Edge> sub;
    for (const Edge& e : edges_)
        if (index[e.u] < order() && index[e.v] < order())
            sub.push_back(Edge{index[e.u], index[e.v]});
    return Graph(sorted.size(), sub);
}

std::vector<Vertex> members(const VertexSet& set)
{
    std::vector<Vertex> out;
    out.reserve(set.count());
    for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
        out.push_back(v);
    return out;
}

VertexSet make_set(std::size_t n, std::span<const Vertex> vertices)
{
    VertexSet out(n);
    for (Vertex v : vertices) {
        if (v >= n)
            throw DomainError("vertex " + std::to_string(v) + " out of range");
        out.set(v);
    }
    return out;
}

} // namespace ksieve
