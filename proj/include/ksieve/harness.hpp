#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ksieve/formulas.hpp"
#include "ksieve/graph.hpp"
#include "ksieve/iasi.hpp"
#include "ksieve/sparing.hpp"

namespace ksieve {

/// Mono-edge parity of every audited cycle against its length.
struct ParityAudit {
    std::size_t cycles_checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

/// Number of mono-indexed edges along a closed walk given as its vertex
/// sequence (the closing edge back to the first vertex is implied).
std::size_t mono_edges_on_cycle(const Labeling& lab, const std::vector<Vertex>& cycle);

/// Checks the witness on `labeled` (normally the k-sieve of `base`): every
/// k-ringlet, i.e. each added edge closed by each geodesic of length k in
/// `base`, and, if `base` is itself a cycle, the base cycle. Pass k = 0 to
/// skip ringlets.
ParityAudit parity_audit(const Graph& base, std::size_t k, const Graph& labeled, const Labeling& lab);

enum class Verdict { match, mismatch, not_applicable, budget_exceeded };

const char* to_string(Verdict verdict);

struct Grid {
    /// cycle | complete | bipartite | path-sieve | cycle-sieve | tree-sieve | bipartite-sieve
    std::string family;
    std::vector<std::size_t> ks;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    /// Instances per (k, grid) for the random families.
    std::size_t count = 0;
    double p = 0.35;
    PathSieveMode mode = PathSieveMode::statement;
};

struct Plan {
    std::uint64_t seed = 1;
    std::uint64_t budget = default_budget;
    std::vector<Grid> grids;
};

/// Throws FormatError on unknown families or missing parameters.
Plan plan_from_json(const nlohmann::json& j);
nlohmann::json plan_to_json(const Plan& plan);

/// Every family the harness knows, at desk-scale sizes.
Plan default_plan();

struct TheoremReport {
    std::string family;
    std::size_t n = 0; ///< family size parameter (path length, cycle order, vertex count)
    std::size_t k = 0; ///< sieve distance, 0 when not a sieve
    std::uint64_t seed = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;

    FormulaResult formula;
    /// Formula status after certification: a predicted 0 on a graph whose
    /// bipartiteness was machine-checked is proven_elementary.
    FormulaStatus status = FormulaStatus::hypothesis;
    bool bipartite = false;

    std::size_t solver_value = 0;
    std::size_t solver_lower_bound = 0;
    Verdict verdict = Verdict::not_applicable;
    std::uint64_t nodes = 0;

    Labeling witness;
    bool witness_valid = false;
    std::optional<ParityAudit> parity;
};

/// One row per instance, in plan order. Deterministic given the plan.
std::vector<TheoremReport> sweep(const Plan& plan);

/// Proven-elementary formula contradicted by the solver.
bool is_proven_failure(const TheoremReport& row);
/// Invalid witness or failed parity audit.
bool is_internal_failure(const TheoremReport& row);

/// Fixed columns:
/// family,n,k,seed,vertices,edges,source,status,formula_value,formula_candidates,
/// solver_value,solver_lower_bound,verdict,nodes,witness_valid,parity,witness
/// The witness column is filled for MISMATCH and BUDGET-EXCEEDED rows.
std::string reports_csv(const std::vector<TheoremReport>& rows);
nlohmann::json reports_json(const Plan& plan, const std::vector<TheoremReport>& rows);

} // namespace ksieve
