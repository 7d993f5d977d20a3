#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ksieve/graph.hpp"

namespace ksieve {

/// All-pairs hop distances. Pairs in different components hold `unreachable`.
class DistanceMatrix {
public:
    using Distance = std::uint32_t;
    static constexpr Distance unreachable = std::numeric_limits<Distance>::max();

    explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, unreachable) {}

    std::size_t order() const { return n_; }
    Distance operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
    Distance& at(Vertex u, Vertex v) { return dist_[u * n_ + v]; }
    bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != unreachable; }

private:
    std::size_t n_;
    std::vector<Distance> dist_;
};

/// BFS from every vertex.
DistanceMatrix distances(const Graph& g);

/// Largest finite distance (0 for a single vertex).
std::size_t diameter(const Graph& g);

bool is_connected(const Graph& g);

/// Vertex lists of the connected components, each ascending, ordered by
/// smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Proper 2-colouring (0/1 per vertex) if one exists; colour 0 goes to the
/// smallest vertex of each component.
std::optional<std::vector<int>> two_coloring(const Graph& g);

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

inline constexpr std::size_t default_isomorphism_cap = 10;
inline constexpr std::size_t default_longest_path_cap = 20;

/// Exact isomorphism test by degree-refined backtracking over vertex maps.
/// Throws CapExceeded when either graph has more than `cap` vertices.
bool are_isomorphic(const Graph& a, const Graph& b, std::size_t cap = default_isomorphism_cap);

/// Edge count of a longest simple path, via subset DP. Throws CapExceeded
/// above `cap` vertices.
std::size_t longest_path_length(const Graph& g, std::size_t cap = default_longest_path_cap);

} // namespace ksieve
