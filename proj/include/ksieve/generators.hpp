#pragma once

#include <cstdint>

#include "ksieve/graph.hpp"

namespace ksieve {

// Standard families. All generators reject sizes outside their domain with
// DomainError and never produce isolated vertices.

/// Path of the given *length* (edge count): length+1 vertices, edges {i,i+1}.
Graph make_path(std::size_t length);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_complete_bipartite(std::size_t m, std::size_t n);
/// K_{1,m}: centre 0, leaves 1..m.
Graph make_star(std::size_t leaves);

// Seeded random families. Identical seeds give identical graphs.

/// Random recursive tree: vertex i > 0 attaches to a uniform earlier vertex.
Graph make_random_tree(std::size_t n, std::uint64_t seed);

/// G(n, p) resampled until connected. Gives up with DomainError after
/// `max_attempts` draws.
Graph make_random_connected(std::size_t n, double p, std::uint64_t seed, int max_attempts = 10000);

/// Random bipartite graph with sides 0..left-1 and left..left+right-1; each
/// cross pair is an edge with probability p, then any isolated vertex is
/// joined to a uniform vertex of the other side.
Graph make_random_bipartite(std::size_t left, std::size_t right, double p, std::uint64_t seed);

} // namespace ksieve
