#include "ksieve/metrics.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "ksieve/errors.hpp"

namespace ksieve {

DistanceMatrix distances(const Graph& g)
{
    const std::size_t n = g.order();
    DistanceMatrix dist(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex source = 0; source < n; ++source) {
        queue.clear();
        queue.push_back(source);
        dist.at(source, source) = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            const auto& nbrs = g.neighbors(x);
            for (auto y = nbrs.find_first(); y != VertexSet::npos; y = nbrs.find_next(y)) {
                if (dist(source, y) == DistanceMatrix::unreachable) {
                    dist.at(source, y) = dist(source, x) + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return dist;
}

std::size_t diameter(const Graph& g)
{
    auto dist = distances(g);
    std::size_t best = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
            if (dist.reachable(u, v))
                best = std::max<std::size_t>(best, dist(u, v));
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<Vertex> comp{root};
        seen[root] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            const auto& nbrs = g.neighbors(comp[head]);
            for (auto y = nbrs.find_first(); y != VertexSet::npos; y = nbrs.find_next(y))
                if (!seen[y]) {
                    seen[y] = true;
                    comp.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() == 1;
}

std::optional<std::vector<int>> two_coloring(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> colour(n, -1);
    std::queue<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (colour[root] != -1)
            continue;
        colour[root] = 0;
        queue.push(root);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            const auto& nbrs = g.neighbors(x);
            for (auto y = nbrs.find_first(); y != VertexSet::npos; y = nbrs.find_next(y)) {
                if (colour[y] == -1) {
                    colour[y] = 1 - colour[x];
                    queue.push(y);
                }
                else if (colour[y] == colour[x])
                    return std::nullopt;
            }
        }
    }
    return colour;
}

namespace {

class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& a, const Graph& b) :
        a_(a), b_(b), n_(a.order()), map_(n_, n_), used_(n_, false)
    {
        // Most constrained first: high degree, then low index.
        order_.resize(n_);
        for (Vertex v = 0; v < n_; ++v)
            order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex x, Vertex y) { return a_.degree(x) > a_.degree(y); });
        // Signature: own degree plus sorted neighbour degrees.
        sig_a_ = signatures(a_);
        sig_b_ = signatures(b_);
    }

    bool run() { return extend(0); }

private:
    static std::vector<std::vector<std::size_t>> signatures(const Graph& g)
    {
        std::vector<std::vector<std::size_t>> sig(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            for (Vertex w : members(g.neighbors(v)))
                sig[v].push_back(g.degree(w));
            std::sort(sig[v].begin(), sig[v].end());
        }
        return sig;
    }

    bool extend(std::size_t depth)
    {
        if (depth == n_)
            return true;
        Vertex x = order_[depth];
        for (Vertex y = 0; y < n_; ++y) {
            if (used_[y] || sig_a_[x] != sig_b_[y])
                continue;
            bool consistent = true;
            for (std::size_t i = 0; i < depth && consistent; ++i) {
                Vertex px = order_[i];
                consistent = a_.adjacent(x, px) == b_.adjacent(y, map_[px]);
            }
            if (!consistent)
                continue;
            map_[x] = y;
            used_[y] = true;
            if (extend(depth + 1))
                return true;
            used_[y] = false;
        }
        map_[x] = n_;
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::size_t n_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    std::vector<std::vector<std::size_t>> sig_a_, sig_b_;
};

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b, std::size_t cap)
{
    if (a.order() > cap || b.order() > cap)
        throw CapExceeded("isomorphism test limited to " + std::to_string(cap) + " vertices");
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    return IsomorphismSearch(a, b).run();
}

std::size_t longest_path_length(const Graph& g, std::size_t cap)
{
    const std::size_t n = g.order();
    if (n > cap || n > 30)
        throw CapExceeded("longest path limited to " + std::to_string(std::min<std::size_t>(cap, 30)) + " vertices");

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }

    // ends[mask]: vertices at which some simple path covering exactly `mask` ends.
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (Vertex v = 0; v < n; ++v)
        ends[std::size_t{1} << v] = 1u << v;

    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < ends.size(); ++mask) {
        std::uint32_t tails = ends[mask];
        if (tails == 0)
            continue;
        best = std::max<std::size_t>(best, std::popcount(mask) - 1);
        while (tails) {
            Vertex v = std::countr_zero(tails);
            tails &= tails - 1;
            std::uint32_t next = adj[v] & ~mask;
            while (next) {
                Vertex w = std::countr_zero(next);
                next &= next - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
        if (best + 1 == n)
            break;
    }
    return best;
}

} // namespace ksieve
