#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ksieve/graph.hpp"
#include "ksieve/sparing.hpp"

namespace ksieve {

// Closed-form sparing numbers for standard families and their sieves.
//
// Each result carries a status: proven_elementary formulas are checked as
// hard assertions; hypothesis formulas are only ever compared against the
// exact solver and reported.

enum class FormulaStatus { proven_elementary, hypothesis };

const char* to_string(FormulaStatus status);

struct FormulaCandidate {
    std::int64_t value = 0;
    /// Which case of the closed form produced the value, with its parameters.
    std::string case_tag;
    /// False for readings outside the primary parameter range (e.g. r = 0
    /// where positive r is stated).
    bool strict = true;
};

struct FormulaResult {
    std::string source;
    FormulaStatus status = FormulaStatus::hypothesis;
    /// Empty means NOT-APPLICABLE.
    std::vector<FormulaCandidate> candidates;
    std::string diagnostic;

    bool applicable() const { return !candidates.empty(); }
    /// First strict candidate, else first candidate.
    std::optional<std::int64_t> value() const;
    bool matches(std::int64_t observed) const;
};

FormulaResult not_applicable(std::string source, FormulaStatus status, std::string diagnostic);

/// C_n, n >= 3: 1 for odd n, 0 for even n.
FormulaResult phi_cycle(std::size_t n);
/// K_n, n >= 1: (n-1)(n-2)/2.
FormulaResult phi_complete(std::size_t n);
/// Any bipartite graph: 0. The caller certifies bipartiteness.
FormulaResult phi_bipartite();

enum class PathSieveMode {
    /// (lk + r)k + s = n over all non-negative l, r, s, as the closed form reads.
    statement,
    /// n = rk + s with 0 <= s < k, values 2r-3 / 2r-2 / 2r-1.
    proof,
};

/// k-sieve of the path of length n, 3 <= k <= n. Odd k gives 0. For k = n
/// the sieve is C_{n+1} and phi_cycle decides. Throws DomainError outside
/// that range.
FormulaResult phi_path_sieve(std::size_t n, std::size_t k, PathSieveMode mode = PathSieveMode::statement);

/// k-sieve of C_n for odd k >= 3: 0 for even n, k+1 for odd n.
/// NOT-APPLICABLE when n < 2k+1.
FormulaResult phi_cycle_sieve_odd_k(std::size_t n, std::size_t k);

/// k-sieve of C_n for even k >= 4. Cases n = 2k -> 3; n = lk + r (l >= 2,
/// r < l) -> 2[(lk+r) - 2 floor(((l-1)k + (r-1))/2)]; n = l(k+1) -> 2l.
/// Every matching decomposition is listed; r = 0 readings are non-strict.
FormulaResult phi_cycle_sieve_even_k(std::size_t n, std::size_t k);

/// When k exceeds the longest path of g the sieve is g itself, so the value
/// is the solver's sparing number of g. NOT-APPLICABLE otherwise.
FormulaResult phi_sieve_trivial(const Graph& g, std::size_t k, std::uint64_t budget = default_budget);

nlohmann::json formula_to_json(const FormulaResult& result);

} // namespace ksieve
