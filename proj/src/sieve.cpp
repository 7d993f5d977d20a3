#include "ksieve/sieve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "ksieve/errors.hpp"
#include "ksieve/metrics.hpp"

namespace ksieve {

namespace {

std::vector<Edge> pairs_at_distance(const DistanceMatrix& dist, std::size_t lo, std::size_t hi)
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < dist.order(); ++u)
        for (Vertex v = u + 1; v < dist.order(); ++v)
            if (dist.reachable(u, v) && dist(u, v) >= lo && dist(u, v) <= hi)
                out.push_back({u, v});
    return out;
}

// Number of shortest paths from `source` to every vertex.
std::vector<std::uint64_t> shortest_path_counts(const Graph& g, const DistanceMatrix& dist, Vertex source)
{
    const std::size_t n = g.order();
    std::vector<Vertex> by_distance(n);
    std::iota(by_distance.begin(), by_distance.end(), Vertex{0});
    std::stable_sort(by_distance.begin(), by_distance.end(),
                     [&](Vertex a, Vertex b) { return dist(source, a) < dist(source, b); });

    std::vector<std::uint64_t> sigma(n, 0);
    sigma[source] = 1;
    for (Vertex x : by_distance) {
        if (!dist.reachable(source, x) || x == source)
            continue;
        const auto& nbrs = g.neighbors(x);
        for (auto y = nbrs.find_first(); y != VertexSet::npos; y = nbrs.find_next(y))
            if (dist(source, y) + 1 == dist(source, x))
                sigma[x] += sigma[y];
    }
    return sigma;
}

} // namespace

Graph k_sieve(const Graph& g, std::size_t k)
{
    if (k < 2)
        throw DomainError("sieve distance k must be at least 2, got " + std::to_string(k));
    return g.with_edges(pairs_at_distance(distances(g), k, k));
}

Graph graph_power(const Graph& g, std::size_t r)
{
    if (r < 1)
        throw DomainError("graph power r must be at least 1");
    return Graph(g.order(), pairs_at_distance(distances(g), 1, r));
}

std::uint64_t RingletCensus::ringlet_total() const
{
    return std::accumulate(geodesic_count.begin(), geodesic_count.end(), std::uint64_t{0});
}

RingletCensus ringlet_census(const Graph& g, std::size_t k)
{
    if (k < 2)
        throw DomainError("sieve distance k must be at least 2, got " + std::to_string(k));
    auto dist = distances(g);
    RingletCensus census;
    census.k = k;
    census.added_edges = pairs_at_distance(dist, k, k);
    Vertex cached = g.order();
    std::vector<std::uint64_t> sigma;
    for (const Edge& e : census.added_edges) {
        if (e.u != cached) {
            sigma = shortest_path_counts(g, dist, e.u);
            cached = e.u;
        }
        census.geodesic_count.push_back(sigma[e.v]);
    }
    return census;
}

std::string census_csv(const RingletCensus& census)
{
    std::ostringstream out;
    out << "u,v,geodesic_count\n";
    for (std::size_t i = 0; i < census.added_edges.size(); ++i)
        out << census.added_edges[i].u << ',' << census.added_edges[i].v << ',' << census.geodesic_count[i] << '\n';
    return out.str();
}

std::vector<std::vector<Vertex>> geodesics(const Graph& g, Vertex from, Vertex to, std::size_t limit)
{
    auto dist = distances(g);
    std::vector<std::vector<Vertex>> out;
    if (!dist.reachable(from, to))
        return out;

    std::vector<Vertex> path{from};
    auto walk = [&](auto&& self, Vertex x) -> void {
        if (x == to) {
            if (out.size() == limit)
                throw CapExceeded("more than " + std::to_string(limit) + " geodesics");
            out.push_back(path);
            return;
        }
        const auto& nbrs = g.neighbors(x);
        for (auto y = nbrs.find_first(); y != VertexSet::npos; y = nbrs.find_next(y)) {
            if (dist(y, to) + 1 != dist(x, to))
                continue;
            path.push_back(y);
            self(self, y);
            path.pop_back();
        }
    };
    walk(walk, from);
    return out;
}

} // namespace ksieve
