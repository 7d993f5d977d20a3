#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ksieve/graph.hpp"
#include "ksieve/iasi.hpp"

namespace ksieve {

inline constexpr std::uint64_t default_budget = 100'000'000;
inline constexpr std::size_t set_oracle_cap = 24;
inline constexpr std::size_t labeling_oracle_cap = 6;

enum class SolveStatus { optimal, budget_exceeded };

const char* to_string(SolveStatus status);

struct SolverStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct IndependentSetResult {
    std::vector<Vertex> set; // ascending
    std::uint64_t weight = 0;
    /// Proven upper bound on the optimum; equals weight when optimal.
    std::uint64_t weight_upper_bound = 0;
    SolveStatus status = SolveStatus::optimal;
    SolverStats stats;
};

/// Maximum-weight independent set by branch and bound.
///
/// Components are solved separately and zero-weight vertices are never
/// selected. Branches on the undecided vertex of highest residual degree
/// (lowest index on ties), include-branch first. A node is pruned when the
/// current weight plus min(candidate weight sum, greedy clique-cover bound)
/// cannot beat the incumbent. Among optimal sets the reported one is
/// canonical: the lowest index that can belong to an optimum is always
/// taken, so the answer does not depend on exploration order.
///
/// `budget` caps search nodes across the whole call; when it runs out the
/// best set found so far is returned with status budget_exceeded.
IndependentSetResult max_weight_independent_set(const Graph& g, const std::vector<std::uint64_t>& weights,
                                                std::uint64_t budget = default_budget);

/// Weights are the vertex degrees of g.
IndependentSetResult max_degree_weight_independent_set(const Graph& g, std::uint64_t budget = default_budget);

struct SparingResult {
    /// Mono-indexed edges of the witness (the sparing number when optimal).
    std::size_t phi = 0;
    /// Proven lower bound; equals phi when optimal.
    std::size_t phi_lower_bound = 0;
    SolveStatus status = SolveStatus::optimal;
    std::vector<Vertex> optimal_set;
    Labeling witness;
    SolverStats stats;

    bool proven_optimal() const { return status == SolveStatus::optimal; }
};

/// Sparing number: |E| minus the best degree-weighted independent set, with
/// a witness weak IASI whose non-singleton vertices are exactly that set.
SparingResult sparing_number(const Graph& g, std::uint64_t budget = default_budget);

/// Same contract, by enumerating every independent set. At most 24 vertices.
SparingResult sparing_number_bruteforce_sets(const Graph& g);

struct LabelingOracleResult {
    /// Empty when no weak IASI exists inside the universe.
    std::optional<std::size_t> phi;
    std::optional<Labeling> witness;
    std::uint64_t nodes = 0;
};

/// Minimum mono-indexed edge count over all weak IASIs whose labels are 1- or
/// 2-element subsets of {0, ..., universe-1}. Works directly on labelings:
/// every labeling is checked with sumsets, never through the independent-set
/// reduction. At most 6 vertices and universe <= 64.
LabelingOracleResult sparing_number_bruteforce_labelings(const Graph& g, std::size_t universe = 16);

/// Fills witness/phi fields for a given non-singleton set.
SparingResult sparing_from_set(const Graph& g, std::vector<Vertex> set, SolveStatus status,
                               std::uint64_t weight_upper_bound, SolverStats stats);

} // namespace ksieve
