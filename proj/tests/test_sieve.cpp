#include <doctest.h>

#include "ksieve/errors.hpp"
#include "ksieve/generators.hpp"
#include "ksieve/metrics.hpp"
#include "ksieve/sieve.hpp"
#include "oracles.hpp"

using namespace ksieve;

namespace {

std::vector<Graph> corpus()
{
    std::vector<Graph> out{make_path(6), make_cycle(7), make_cycle(8), make_complete_bipartite(2, 3),
                           Graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}, {4, 5}})};
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        out.push_back(make_random_connected(8, 0.3, seed));
        out.push_back(make_random_tree(8, seed + 100));
    }
    return out;
}

} // namespace

TEST_CASE("k_sieve examples")
{
    CHECK(k_sieve(make_path(3), 3) == make_cycle(4));

    Graph s = k_sieve(make_cycle(12), 3);
    CHECK(s.size() == 24);
    for (Vertex v = 0; v < 12; ++v)
        CHECK(s.degree(v) == 4);

    Graph k4 = make_complete(4);
    CHECK(longest_path_length(k4) == 3);
    CHECK(k_sieve(k4, 4) == k4);

    CHECK_THROWS_AS(k_sieve(make_path(3), 1), DomainError);
    CHECK_THROWS_AS(ringlet_census(make_path(3), 0), DomainError);
}

TEST_CASE("k_sieve adds exactly the pairs at distance k")
{
    for (const Graph& g : corpus())
        for (std::size_t k = 2; k <= 5; ++k) {
            Graph s = k_sieve(g, k);
            auto d = oracle::distances(g);
            for (Vertex u = 0; u < g.order(); ++u)
                for (Vertex v = u + 1; v < g.order(); ++v)
                    CHECK(s.adjacent(u, v) == (g.adjacent(u, v) || d[u][v] == k));
        }
}

TEST_CASE("k_sieve is the identity beyond the longest path")
{
    for (const Graph& g : corpus()) {
        std::size_t longest = longest_path_length(g);
        for (std::size_t k = longest + 1; k <= longest + 3; ++k)
            CHECK(k_sieve(g, std::max<std::size_t>(k, 2)).edges() == g.edges());
    }
}

TEST_CASE("graph_power examples")
{
    Graph g = make_random_connected(7, 0.35, 11);
    CHECK(graph_power(g, 1) == g);
    CHECK(graph_power(g, diameter(g)) == make_complete(7));
    CHECK(graph_power(make_path(3), 2).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(graph_power(g, 0), DomainError);

    // Complete on each component, nothing across.
    Graph split(5, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
    Graph full = graph_power(split, diameter(split));
    CHECK(full.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}});
}

TEST_CASE("square equals the 2-sieve up to isomorphism")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = make_random_connected(3 + seed % 6, 0.35, seed);
        CHECK(are_isomorphic(k_sieve(g, 2), graph_power(g, 2)));
    }
}

TEST_CASE("odd-k sieves of trees and bipartite graphs stay bipartite")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        for (std::size_t k : {3, 5, 7}) {
            CHECK(is_bipartite(k_sieve(make_random_tree(12, seed), k)));
            CHECK(is_bipartite(k_sieve(make_random_bipartite(5, 6, 0.3, seed), k)));
        }
    // Even k generally breaks bipartiteness.
    CHECK_FALSE(is_bipartite(k_sieve(make_path(6), 4)));
}

TEST_CASE("cycle sieve degrees")
{
    for (std::size_t k = 3; k <= 6; ++k) {
        Graph cubic = k_sieve(make_cycle(2 * k), k);
        for (Vertex v = 0; v < 2 * k; ++v)
            CHECK(cubic.degree(v) == 3);
        for (std::size_t n = 2 * k + 1; n <= 2 * k + 6; ++n) {
            Graph quartic = k_sieve(make_cycle(n), k);
            for (Vertex v = 0; v < n; ++v)
                CHECK(quartic.degree(v) == 4);
        }
        // Below 2k nothing is at distance k.
        CHECK(k_sieve(make_cycle(2 * k - 1), k) == make_cycle(2 * k - 1));
    }
}

TEST_CASE("ringlet census examples")
{
    auto c12 = ringlet_census(make_cycle(12), 3);
    CHECK(c12.added_edges.size() == 12);
    for (auto count : c12.geodesic_count)
        CHECK(count == 1);
    CHECK(c12.ringlet_total() == 12);

    CHECK(ringlet_census(make_complete(4), 3).added_edges.empty());

    // Each added edge of a path sieve spans exactly k steps.
    for (std::size_t k = 3; k <= 6; ++k) {
        auto census = ringlet_census(make_path(14), k);
        CHECK(census.added_edges.size() == 15 - k);
        for (const Edge& e : census.added_edges)
            CHECK(e.v - e.u == k);
    }

    // Antipodal pairs of an even cycle have two geodesics.
    auto c8 = ringlet_census(make_cycle(8), 4);
    CHECK(c8.added_edges.size() == 4);
    for (auto count : c8.geodesic_count)
        CHECK(count == 2);
}

TEST_CASE("geodesic counts agree with brute-force path enumeration")
{
    for (const Graph& g : corpus())
        for (std::size_t k = 2; k <= 4; ++k) {
            auto census = ringlet_census(g, k);
            auto d = oracle::distances(g);
            for (std::size_t i = 0; i < census.added_edges.size(); ++i) {
                const Edge& e = census.added_edges[i];
                CHECK(d[e.u][e.v] == k);
                CHECK_FALSE(g.adjacent(e.u, e.v));
                CHECK(census.geodesic_count[i] == oracle::simple_paths_between(g, e.u, e.v, k));
                auto paths = geodesics(g, e.u, e.v);
                CHECK(paths.size() == census.geodesic_count[i]);
                for (const auto& p : paths) {
                    CHECK(p.size() == k + 1);
                    for (std::size_t j = 0; j + 1 < p.size(); ++j)
                        CHECK(g.adjacent(p[j], p[j + 1]));
                }
            }
        }
}

TEST_CASE("census CSV layout")
{
    CHECK(census_csv(ringlet_census(make_path(4), 3)) == "u,v,geodesic_count\n0,3,1\n1,4,1\n");
}

TEST_CASE("disconnected sieves never join components")
{
    Graph g(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}});
    Graph s = k_sieve(g, 3);
    CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}, {4, 5}, {5, 6}});
    CHECK(geodesics(g, 0, 5).empty());
}
