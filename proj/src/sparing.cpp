#include "ksieve/sparing.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>

#include "ksieve/errors.hpp"
#include "ksieve/metrics.hpp"

namespace ksieve {

const char* to_string(SolveStatus status)
{
    return status == SolveStatus::optimal ? "optimal" : "budget_exceeded";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Branch and bound over one connected component.
class Search {
public:
    Search(const Graph& g, const std::vector<std::uint64_t>& weights, std::uint64_t& nodes, std::uint64_t budget) :
        g_(g), w_(weights), nodes_(nodes), budget_(budget)
    {
    }

    bool aborted() const { return aborted_; }
    std::uint64_t best_weight() const { return best_; }
    const VertexSet& best_set() const { return best_set_; }

    VertexSet positive_vertices() const
    {
        VertexSet p = g_.empty_set();
        for (Vertex v = 0; v < g_.order(); ++v)
            if (w_[v] > 0)
                p.set(v);
        return p;
    }

    /// Best independent set inside `pool`.
    void maximize(const VertexSet& pool)
    {
        stop_on_improve_ = false;
        greedy(pool);
        expand(pool, 0, g_.empty_set());
    }

    /// Whether some independent set inside `pool` weighs at least `target`.
    /// Unknown when the budget runs out; check aborted().
    bool reach(const VertexSet& pool, std::uint64_t target)
    {
        if (target == 0)
            return true;
        stop_on_improve_ = true;
        best_ = target - 1;
        best_set_ = g_.empty_set();
        found_ = false;
        expand(pool, 0, g_.empty_set());
        return found_;
    }

    std::uint64_t bound(const VertexSet& pool) const
    {
        std::uint64_t total = 0;
        for (auto v = pool.find_first(); v != VertexSet::npos; v = pool.find_next(v))
            total += w_[v];
        return std::min(total, clique_cover_bound(pool));
    }

private:
    // Any independent set meets each clique at most once, so the heaviest
    // member of every clique in a cover bounds the set's weight.
    std::uint64_t clique_cover_bound(const VertexSet& pool) const
    {
        std::vector<Vertex> order = members(pool);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return w_[a] > w_[b]; });
        std::vector<VertexSet> joinable; // vertices adjacent to every member
        std::uint64_t total = 0;
        for (Vertex v : order) {
            auto slot = std::find_if(joinable.begin(), joinable.end(), [&](const VertexSet& s) { return s.test(v); });
            if (slot == joinable.end()) {
                joinable.push_back(g_.neighbors(v) & pool);
                total += w_[v];
            }
            else
                *slot &= g_.neighbors(v);
        }
        return total;
    }

    void greedy(VertexSet pool)
    {
        VertexSet chosen = g_.empty_set();
        std::uint64_t weight = 0;
        while (pool.any()) {
            Vertex pick = pool.find_first();
            for (auto v = pool.find_next(pick); v != VertexSet::npos; v = pool.find_next(v))
                if (w_[v] > w_[pick])
                    pick = v;
            chosen.set(pick);
            weight += w_[pick];
            pool -= g_.neighbors(pick);
            pool.reset(pick);
        }
        if (weight > best_ || best_set_.empty()) {
            best_ = weight;
            best_set_ = chosen;
        }
    }

    void expand(VertexSet pool, std::uint64_t weight, VertexSet chosen)
    {
        if (aborted_ || found_)
            return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }

        // Vertices with no candidate neighbour are always worth taking.
        Vertex branch = g_.order();
        std::size_t branch_degree = 0;
        for (auto v = pool.find_first(); v != VertexSet::npos; v = pool.find_next(v)) {
            std::size_t d = (g_.neighbors(v) & pool).count();
            if (d == 0) {
                chosen.set(v);
                weight += w_[v];
                pool.reset(v);
            }
            else if (d > branch_degree) {
                branch = v;
                branch_degree = d;
            }
        }

        if (branch == g_.order()) {
            if (weight > best_) {
                best_ = weight;
                best_set_ = chosen;
                found_ = stop_on_improve_;
            }
            return;
        }
        if (weight + bound(pool) <= best_)
            return;

        VertexSet with = pool - g_.neighbors(branch);
        with.reset(branch);
        VertexSet chosen_with = chosen;
        chosen_with.set(branch);
        expand(std::move(with), weight + w_[branch], std::move(chosen_with));

        pool.reset(branch);
        expand(std::move(pool), weight, std::move(chosen));
    }

    const Graph& g_;
    const std::vector<std::uint64_t>& w_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::uint64_t best_ = 0;
    VertexSet best_set_;
    bool aborted_ = false;
    bool stop_on_improve_ = false;
    bool found_ = false;
};

// Lowest-index-first optimum of weight `optimum`; nullopt if the budget runs
// out before the walk completes.
std::optional<VertexSet> canonical_optimum(const Graph& g, const std::vector<std::uint64_t>& w,
                                           std::uint64_t optimum, std::uint64_t& nodes, std::uint64_t budget)
{
    VertexSet pool = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v)
        if (w[v] > 0)
            pool.set(v);
    VertexSet chosen = g.empty_set();
    std::uint64_t weight = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!pool.test(v))
            continue;
        pool.reset(v);
        if (weight + w[v] > optimum)
            continue;
        VertexSet rest = pool - g.neighbors(v);
        Search probe(g, w, nodes, budget);
        bool feasible = probe.reach(rest, optimum - weight - w[v]);
        if (probe.aborted())
            return std::nullopt;
        if (feasible) {
            chosen.set(v);
            weight += w[v];
            pool = std::move(rest);
        }
    }
    return chosen;
}

} // namespace

IndependentSetResult max_weight_independent_set(const Graph& g, const std::vector<std::uint64_t>& weights,
                                                std::uint64_t budget)
{
    if (weights.size() != g.order())
        throw DomainError("one weight per vertex required");
    const auto start = Clock::now();
    IndependentSetResult result;

    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) {
            if (weights[comp[0]] > 0) {
                result.set.push_back(comp[0]);
                result.weight += weights[comp[0]];
                result.weight_upper_bound += weights[comp[0]];
            }
            continue;
        }
        Graph local = g.induced(comp);
        std::vector<std::uint64_t> local_w(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            local_w[i] = weights[comp[i]];

        Search search(local, local_w, result.stats.nodes, budget);
        VertexSet pool = search.positive_vertices();
        const std::uint64_t root_bound = search.bound(pool);
        search.maximize(pool);

        VertexSet picked = search.best_set();
        if (search.aborted()) {
            result.status = SolveStatus::budget_exceeded;
            result.weight_upper_bound += std::max(root_bound, search.best_weight());
        }
        else {
            result.weight_upper_bound += search.best_weight();
            if (auto canon = canonical_optimum(local, local_w, search.best_weight(), result.stats.nodes, budget))
                picked = *canon;
        }
        result.weight += search.best_weight();
        for (auto i = picked.find_first(); i != VertexSet::npos; i = picked.find_next(i))
            result.set.push_back(comp[i]);
    }
    std::sort(result.set.begin(), result.set.end());
    result.stats.seconds = seconds_since(start);
    return result;
}

IndependentSetResult max_degree_weight_independent_set(const Graph& g, std::uint64_t budget)
{
    auto deg = g.degrees();
    return max_weight_independent_set(g, std::vector<std::uint64_t>(deg.begin(), deg.end()), budget);
}

SparingResult sparing_from_set(const Graph& g, std::vector<Vertex> set, SolveStatus status,
                               std::uint64_t weight_upper_bound, SolverStats stats)
{
    SparingResult result;
    std::uint64_t weight = 0;
    for (Vertex v : set)
        weight += g.degree(v);
    result.phi = g.size() - weight;
    result.phi_lower_bound = g.size() - std::min<std::uint64_t>(weight_upper_bound, g.size());
    result.status = status;
    result.witness = synthesize_labeling(g, make_set(g.order(), set));
    result.optimal_set = std::move(set);
    result.stats = stats;
    return result;
}

SparingResult sparing_number(const Graph& g, std::uint64_t budget)
{
    auto best = max_degree_weight_independent_set(g, budget);
    return sparing_from_set(g, std::move(best.set), best.status, best.weight_upper_bound, best.stats);
}

SparingResult sparing_number_bruteforce_sets(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > set_oracle_cap)
        throw CapExceeded("set enumeration limited to " + std::to_string(set_oracle_cap) + " vertices");
    const auto start = Clock::now();

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    auto deg = g.degrees();

    std::uint32_t best_mask = 0;
    std::uint64_t best_weight = 0;
    std::uint64_t visited = 0;
    // Ties go to the set containing the lowest index where the two differ.
    auto better = [&](std::uint32_t mask, std::uint64_t weight) {
        if (weight != best_weight)
            return weight > best_weight;
        std::uint32_t diff = mask ^ best_mask;
        return diff != 0 && (mask & (diff & -diff)) != 0;
    };
    auto walk = [&](auto&& self, std::size_t i, std::uint32_t mask, std::uint32_t blocked, std::uint64_t weight) -> void {
        ++visited;
        if (i == n) {
            if (better(mask, weight)) {
                best_mask = mask;
                best_weight = weight;
            }
            return;
        }
        self(self, i + 1, mask, blocked, weight);
        if (deg[i] > 0 && !(blocked >> i & 1u))
            self(self, i + 1, mask | 1u << i, blocked | adj[i], weight + deg[i]);
    };
    walk(walk, 0, 0, 0, 0);

    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v)
        if (best_mask >> v & 1u)
            set.push_back(v);
    return sparing_from_set(g, std::move(set), SolveStatus::optimal, best_weight,
                            SolverStats{visited, seconds_since(start)});
}

namespace {

using Wide = unsigned __int128;

// Labels as bitmasks over the universe; sums fit in 128 bits.
Wide add_sets(std::uint64_t a, std::uint64_t b)
{
    Wide out = 0;
    while (a) {
        int x = std::countr_zero(a);
        a &= a - 1;
        out |= static_cast<Wide>(b) << x;
    }
    return out;
}

int wide_popcount(Wide x)
{
    return std::popcount(static_cast<std::uint64_t>(x)) + std::popcount(static_cast<std::uint64_t>(x >> 64));
}

// Conflict-directed backjumping over labelings with a fixed pattern of label
// sizes (bit v of `wide` set = vertex v gets a 2-element label).
class LabelingSearch {
public:
    LabelingSearch(const Graph& g, std::size_t universe, std::uint32_t wide, std::uint64_t& nodes) :
        g_(g), n_(g.order()), wide_(wide), nodes_(nodes), label_(n_, 0)
    {
        for (std::size_t x = 0; x < universe; ++x)
            singles_.push_back(std::uint64_t{1} << x);
        for (std::size_t x = 0; x < universe; ++x)
            for (std::size_t y = x + 1; y < universe; ++y)
                pairs_.push_back(std::uint64_t{1} << x | std::uint64_t{1} << y);
    }

    bool run() { return assign(0).first; }
    const std::vector<std::uint64_t>& labels() const { return label_; }

private:
    // Earlier vertices that make `candidate` unusable at vertex i; zero if usable.
    std::uint32_t conflicts(Vertex i, std::uint64_t candidate, std::vector<std::pair<Wide, std::uint32_t>>& fresh) const
    {
        std::uint32_t culprits = 0;
        fresh.clear();
        for (Vertex j = 0; j < i; ++j)
            if (label_[j] == candidate)
                culprits |= 1u << j;
        for (Vertex j = 0; j < i; ++j) {
            if (!g_.adjacent(i, j))
                continue;
            Wide sum = add_sets(candidate, label_[j]);
            int size = wide_popcount(sum);
            if (size != std::max(std::popcount(candidate), std::popcount(label_[j]))) {
                culprits |= 1u << j;
                continue;
            }
            for (const auto& [other, owners] : edges_)
                if (other == sum)
                    culprits |= owners | 1u << j;
            for (const auto& [other, owners] : fresh)
                if (other == sum)
                    culprits |= owners | 1u << j;
            fresh.emplace_back(sum, 1u << j);
        }
        return culprits;
    }

    std::pair<bool, std::uint32_t> assign(Vertex i)
    {
        ++nodes_;
        if (i == n_)
            return {true, 0};
        const auto& domain = (wide_ >> i & 1u) ? pairs_ : singles_;
        std::uint32_t conflict_set = 0;
        std::vector<std::pair<Wide, std::uint32_t>> fresh;
        for (std::uint64_t candidate : domain) {
            std::uint32_t culprits = conflicts(i, candidate, fresh);
            if (culprits) {
                conflict_set |= culprits;
                continue;
            }
            label_[i] = candidate;
            const std::size_t mark = edges_.size();
            for (const auto& [sum, owner] : fresh)
                edges_.emplace_back(sum, owner | 1u << i);
            auto [ok, child] = assign(i + 1);
            if (ok)
                return {true, 0};
            edges_.resize(mark);
            label_[i] = 0;
            if (!(child >> i & 1u))
                return {false, child};
            conflict_set |= child & ~(1u << i);
        }
        return {false, conflict_set};
    }

    const Graph& g_;
    std::size_t n_;
    std::uint32_t wide_;
    std::uint64_t& nodes_;
    std::vector<std::uint64_t> label_;
    std::vector<std::uint64_t> singles_, pairs_;
    std::vector<std::pair<Wide, std::uint32_t>> edges_;
};

} // namespace

LabelingOracleResult sparing_number_bruteforce_labelings(const Graph& g, std::size_t universe)
{
    const std::size_t n = g.order();
    if (n > labeling_oracle_cap)
        throw CapExceeded("labeling enumeration limited to " + std::to_string(labeling_oracle_cap) + " vertices");
    if (universe < 1 || universe > 64)
        throw DomainError("labeling universe must be in [1, 64]");

    LabelingOracleResult result;
    for (std::uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
        LabelingSearch search(g, universe, pattern, result.nodes);
        if (!search.run())
            continue;

        Labeling lab;
        for (Vertex v = 0; v < n; ++v) {
            std::vector<SetLabel::Element> elems;
            for (std::uint64_t bits = search.labels()[v]; bits; bits &= bits - 1)
                elems.push_back(std::countr_zero(bits));
            lab.assign(v, SetLabel(std::move(elems)));
        }
        std::size_t mono = 0;
        for (const Edge& e : g.edges())
            mono += wide_popcount(add_sets(search.labels()[e.u], search.labels()[e.v])) == 1;
        if (!result.phi || mono < *result.phi) {
            result.phi = mono;
            result.witness = std::move(lab);
        }
    }
    return result;
}

} // namespace ksieve
