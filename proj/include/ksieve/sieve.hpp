#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksieve/graph.hpp"

namespace ksieve {

/// G^(k): G plus an edge between every pair at distance exactly k in G.
/// Pairs in different components are never joined. Requires k >= 2.
Graph k_sieve(const Graph& g, std::size_t k);

/// G^r: every distinct pair at distance <= r joined. Requires r >= 1.
Graph graph_power(const Graph& g, std::size_t r);

/// Edges that k_sieve adds, with the number of distinct shortest k-paths
/// between the endpoints of each (each such path closes one k-ringlet).
struct RingletCensus {
    std::size_t k = 0;
    std::vector<Edge> added_edges;
    std::vector<std::uint64_t> geodesic_count;

    std::uint64_t ringlet_total() const;
};

RingletCensus ringlet_census(const Graph& g, std::size_t k);

/// CSV with header "u,v,geodesic_count", one row per added edge.
std::string census_csv(const RingletCensus& census);

/// Every shortest path from `from` to `to` as a vertex sequence, in
/// lexicographic order. Empty when unreachable. Throws CapExceeded if there
/// are more than `limit` of them.
std::vector<std::vector<Vertex>> geodesics(const Graph& g, Vertex from, Vertex to, std::size_t limit = 1u << 16);

} // namespace ksieve
