#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ksieve {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<>;

// Undirected edge in canonical orientation (u < v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built: the edge list is kept sorted lexicographically with
/// u < v, and the per-vertex neighbour bitsets always mirror it. Isolated
/// vertices are representable.
class Graph {
public:
    /// Edgeless graph on `n >= 1` vertices.
    explicit Graph(std::size_t n);

    /// Throws DomainError on self-loops, out-of-range endpoints or repeated
    /// edges (in either orientation).
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
    bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].test(b); }
    std::size_t degree(Vertex v) const { return adjacency_[v].count(); }
    std::vector<std::size_t> degrees() const;

    /// Union of this graph's edges with `extra`; pairs already present are
    /// skipped rather than rejected.
    Graph with_edges(std::span<const Edge> extra) const;

    /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in ascending
    /// order of the original index.
    Graph induced(std::span<const Vertex> keep) const;

    VertexSet empty_set() const { return VertexSet(order()); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
    void check_and_link();

    std::vector<Edge> edges_;
    std::vector<VertexSet> adjacency_;
};

/// Ascending list of the members of a bitset.
std::vector<Vertex> members(const VertexSet& set);

/// Bitset of size `n` with the given members.
VertexSet make_set(std::size_t n, std::span<const Vertex> vertices);

} // namespace ksieve
