#include "ksieve/generators.hpp"

#include <string>
#include <vector>

#include "ksieve/errors.hpp"
#include "ksieve/metrics.hpp"
#include "ksieve/rng.hpp"

namespace ksieve {

namespace {

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must lie in [0,1]");
}

} // namespace

Graph make_path(std::size_t length)
{
    if (length < 1)
        throw DomainError("path length must be at least 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < length; ++i)
        edges.push_back({i, i + 1});
    return Graph(length + 1, edges);
}

Graph make_cycle(std::size_t n)
{
    if (n < 3)
        throw DomainError("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back(Edge::canonical(i, (i + 1) % n));
    return Graph(n, edges);
}

Graph make_complete(std::size_t n)
{
    if (n < 1)
        throw DomainError("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

Graph make_complete_bipartite(std::size_t m, std::size_t n)
{
    if (m < 1 || n < 1)
        throw DomainError("complete bipartite graph needs both sides non-empty");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = 0; v < n; ++v)
            edges.push_back({u, m + v});
    return Graph(m + n, edges);
}

Graph make_star(std::size_t leaves)
{
    return make_complete_bipartite(1, leaves);
}

Graph make_random_tree(std::size_t n, std::uint64_t seed)
{
    if (n < 2)
        throw DomainError("random tree needs at least 2 vertices");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({rng.below(v), v});
    return Graph(n, edges);
}

Graph make_random_connected(std::size_t n, double p, std::uint64_t seed, int max_attempts)
{
    if (n < 2)
        throw DomainError("random connected graph needs at least 2 vertices");
    check_probability(p);
    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.chance(p))
                    edges.push_back({u, v});
        Graph g(n, edges);
        if (is_connected(g))
            return g;
    }
    throw DomainError("no connected sample after " + std::to_string(max_attempts) + " attempts (p too small?)");
}

Graph make_random_bipartite(std::size_t left, std::size_t right, double p, std::uint64_t seed)
{
    if (left < 1 || right < 1)
        throw DomainError("random bipartite graph needs both sides non-empty");
    check_probability(p);
    Rng rng(seed);
    const std::size_t n = left + right;
    std::vector<Edge> edges;
    std::vector<bool> touched(n, false);
    for (Vertex u = 0; u < left; ++u)
        for (Vertex v = left; v < n; ++v)
            if (rng.chance(p)) {
                edges.push_back({u, v});
                touched[u] = touched[v] = true;
            }
    for (Vertex v = 0; v < n; ++v) {
        if (touched[v])
            continue;
        Vertex other = v < left ? left + rng.below(right) : rng.below(left);
        edges.push_back(Edge::canonical(v, other));
        touched[v] = touched[other] = true;
    }
    return Graph(n, edges);
}

} // namespace ksieve
