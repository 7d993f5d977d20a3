// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ksieve/formulas.hpp"
#include "ksieve/generators.hpp"
#include "ksieve/harness.hpp"
#include "ksieve/metrics.hpp"
#include "ksieve/rng.hpp"
#include "ksieve/sieve.hpp"
#include "ksieve/sparing.hpp"
#include "oracles.hpp"

using namespace ksieve;
using nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::ostringstream problems;

    void fail(const std::string& what)
    {
        if (ok)
            problems << what;
        else if (problems.tellp() < 400)
            problems << "; " << what;
        ok = false;
    }
};

struct Solved {
    std::string where;
    Graph graph;
    SparingResult result;
};

// Every solver result of criteria 1-9, re-checked by criterion 10.
std::vector<Solved> ledger;
std::vector<TheoremReport> swept;

SparingResult solve(const std::string& where, const Graph& g)
{
    SparingResult r = sparing_number(g);
    ledger.push_back({where, g, r});
    return r;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p))
                edges.push_back({u, v});
    return Graph(n, edges);
}

Plan sieve_plan(std::vector<Grid> grids)
{
    Plan plan;
    plan.seed = 20130801;
    plan.grids = std::move(grids);
    return plan;
}

Grid grid(std::string family, std::vector<std::size_t> ks, std::size_t lo, std::size_t hi)
{
    Grid g;
    g.family = std::move(family);
    g.ks = std::move(ks);
    g.n_min = lo;
    g.n_max = hi;
    return g;
}

Graph rebuild(const TheoremReport& row)
{
    Graph base = row.family == "cycle-sieve" ? make_cycle(row.n) : make_path(row.n);
    return k_sieve(base, row.k);
}

using Named = std::vector<std::pair<std::string, Graph>>;

// Base graphs of criterion 6.
Named square_bases()
{
    Named out;
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        out.emplace_back("square seed " + std::to_string(seed), make_random_connected(2 + seed % 7, 0.3, 500 + seed));
    return out;
}

// Sieves of criterion 7.
Named odd_sieves()
{
    Named out;
    for (std::size_t k : {3, 5})
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng pick(seed * 31 + k);
            std::size_t n = 4 + pick.below(9);
            std::size_t left = 1 + pick.below(n - 1);
            std::string tag = " seed " + std::to_string(seed) + " k=" + std::to_string(k);
            out.emplace_back("tree" + tag, k_sieve(make_random_tree(n, 700 + seed), k));
            out.emplace_back("bipartite" + tag, k_sieve(make_random_bipartite(left, n - left, 0.35, 900 + seed), k));
        }
    return out;
}

// Sieves of criterion 8.
Named odd_cycle_sieves()
{
    Named out;
    for (std::size_t n = 7; n <= 15; ++n)
        out.emplace_back("C_" + std::to_string(n) + "^(3)", k_sieve(make_cycle(n), 3));
    for (std::size_t n = 11; n <= 17; ++n)
        out.emplace_back("C_" + std::to_string(n) + "^(5)", k_sieve(make_cycle(n), 5));
    return out;
}

Outcome cycles()
{
    Outcome o;
    for (std::size_t n = 3; n <= 14; ++n) {
        auto r = solve("C_" + std::to_string(n), make_cycle(n));
        if (!r.proven_optimal() || r.phi != n % 2)
            o.fail("C_" + std::to_string(n) + " gave " + std::to_string(r.phi));
    }
    o.detail = "phi(C_n) = n mod 2, n = 3..14";
    return o;
}

Outcome complete_graphs()
{
    Outcome o;
    for (std::size_t n = 2; n <= 10; ++n) {
        auto r = solve("K_" + std::to_string(n), make_complete(n));
        if (!r.proven_optimal() || r.phi != (n - 1) * (n - 2) / 2)
            o.fail("K_" + std::to_string(n) + " gave " + std::to_string(r.phi));
    }
    o.detail = "phi(K_n) = (n-1)(n-2)/2, n = 2..10";
    return o;
}

Outcome bipartite()
{
    Outcome o;
    std::size_t max_order = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng pick(seed);
        std::size_t n = 2 + pick.below(15);
        std::size_t left = 1 + pick.below(n - 1);
        Graph g = make_random_bipartite(left, n - left, 0.2 + 0.01 * seed, 1000 + seed);
        max_order = std::max(max_order, g.order());
        if (!is_bipartite(g))
            o.fail("seed " + std::to_string(seed) + " not bipartite");
        auto r = solve("bipartite seed " + std::to_string(seed), g);
        if (!r.proven_optimal() || r.phi != 0)
            o.fail("seed " + std::to_string(seed) + " gave " + std::to_string(r.phi));
    }
    o.detail = "50 random bipartite graphs, largest n = " + std::to_string(max_order) + ", all phi = 0";
    return o;
}

Outcome reduction_validity()
{
    Outcome o;
    Named graphs;
    for (std::size_t n = 1; n <= 5; ++n) {
        auto atlas = oracle::connected_atlas(n);
        for (std::size_t i = 0; i < atlas.size(); ++i)
            graphs.emplace_back("atlas n=" + std::to_string(n) + " #" + std::to_string(i), atlas[i]);
    }
    const std::size_t atlas_size = graphs.size();
    graphs.emplace_back("C_5", make_cycle(5));
    graphs.emplace_back("K_4", make_complete(4));
    graphs.emplace_back("P_4^(3)", k_sieve(make_path(4), 3));

    for (const auto& [name, g] : graphs) {
        auto lab = sparing_number_bruteforce_labelings(g, 16);
        std::uint64_t reduced = g.size() - max_degree_weight_independent_set(g).weight;
        solve(name, g);
        if (!lab.phi)
            o.fail(name + ": no labeling in universe");
        else if (*lab.phi != reduced)
            o.fail(name + ": labelings " + std::to_string(*lab.phi) + " vs reduction " + std::to_string(reduced));
        else if (!is_weak_iasi(g, *lab.witness) || mono_indexed_edge_count(g, *lab.witness) != *lab.phi)
            o.fail(name + ": oracle witness invalid");
    }
    o.detail = std::to_string(atlas_size) + " connected graphs (n <= 5) + C_5, K_4, P_4^(3); universe 16";
    return o;
}

Outcome solver_vs_sets()
{
    Outcome o;
    Named graphs;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::size_t n = 1 + seed % 16;
        double p = 0.1 + 0.05 * static_cast<double>(seed % 12);
        Graph g = seed % 2 || n < 2 ? random_graph(n, p, seed) : make_random_connected(n, p, seed);
        graphs.emplace_back("random seed " + std::to_string(seed), g);
    }
    std::size_t sieves = 0;
    for (auto& [name, g] : square_bases()) {
        graphs.emplace_back(name + " 2-sieve", k_sieve(g, 2));
        graphs.emplace_back(name + " square", graph_power(g, 2));
        sieves += 2;
    }
    for (Named more : {odd_sieves(), odd_cycle_sieves()})
        for (auto& entry : more) {
            graphs.push_back(std::move(entry));
            ++sieves;
        }

    for (const auto& [name, g] : graphs) {
        auto bb = solve(name, g);
        auto sets = sparing_number_bruteforce_sets(g);
        ledger.push_back({name + " (sets)", g, sets});
        if (!bb.proven_optimal() || bb.phi != sets.phi || bb.optimal_set != sets.optimal_set)
            o.fail(name + ": " + std::to_string(bb.phi) + " vs " + std::to_string(sets.phi));
    }
    o.detail = "200 random graphs (n <= 16) + " + std::to_string(sieves) + " sieve instances";
    return o;
}

Outcome remark_square()
{
    Outcome o;
    for (const auto& [name, g] : square_bases()) {
        if (!are_isomorphic(k_sieve(g, 2), graph_power(g, 2)))
            o.fail(name);
        if (!oracle::isomorphic(k_sieve(g, 2), graph_power(g, 2)))
            o.fail(name + " (permutation oracle)");
    }
    o.detail = "30 random connected graphs, n <= 8";
    return o;
}

Outcome odd_sieves_bipartite()
{
    Outcome o;
    for (const auto& [name, g] : odd_sieves()) {
        if (!is_bipartite(g))
            o.fail(name + " sieve not bipartite");
        auto r = solve(name, g);
        if (!r.proven_optimal() || r.phi != 0)
            o.fail(name + " phi " + std::to_string(r.phi));
    }
    o.detail = "20 trees + 20 bipartite graphs per k in {3,5}, n <= 12";
    return o;
}

Outcome odd_k_cycle_harness()
{
    Outcome o;
    Plan plan = sieve_plan({grid("cycle-sieve", {3}, 7, 15), grid("cycle-sieve", {5}, 11, 17)});
    auto rows = sweep(plan);
    json report = reports_json(plan, rows);
    std::string csv = reports_csv(rows);
    std::size_t match = 0, mismatch = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        std::string name = "C_" + std::to_string(row.n) + "^(" + std::to_string(row.k) + ")";
        if (row.verdict == Verdict::match) {
            ++match;
        }
        else if (row.verdict == Verdict::mismatch) {
            ++mismatch;
            Labeling lab = labeling_from_json(report["rows"][i]["witness"]);
            Graph g = rebuild(row);
            if (!is_weak_iasi(g, lab) || mono_indexed_edge_count(g, lab) != row.solver_value)
                o.fail(name + ": embedded witness does not re-validate");
        }
        else {
            o.fail(name + ": verdict " + to_string(row.verdict));
        }
    }
    if (std::count(csv.begin(), csv.end(), '\n') != static_cast<std::ptrdiff_t>(rows.size() + 1))
        o.fail("CSV row count");
    for (std::size_t n : {12, 14}) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.k == 3 && r.n == n; });
        if (it == rows.end() || it->verdict != Verdict::match || !it->bipartite ||
            it->status != FormulaStatus::proven_elementary)
            o.fail("(" + std::to_string(n) + ",3) is not a certified MATCH");
    }
    for (const auto& row : rows)
        if (is_proven_failure(row))
            o.fail("proven formula contradicted at n=" + std::to_string(row.n));
    swept.insert(swept.end(), rows.begin(), rows.end());
    o.detail = std::to_string(rows.size()) + " rows: " + std::to_string(match) + " MATCH, " + std::to_string(mismatch) +
               " MISMATCH (witnesses re-validated)";
    return o;
}

Outcome even_k_harness()
{
    Outcome o;
    Plan plan = sieve_plan({grid("path-sieve", {4, 6}, 4, 24), grid("cycle-sieve", {4}, 8, 24)});
    auto rows = sweep(plan);
    auto again = sweep(plan);
    if (reports_csv(rows) != reports_csv(again))
        o.fail("CSV differs between reruns");
    if (reports_json(plan, rows).dump() != reports_json(plan, again).dump())
        o.fail("JSON differs between reruns");
    std::size_t expected = (24 - 4 + 1) + (24 - 6 + 1) + (24 - 8 + 1);
    if (rows.size() != expected)
        o.fail("expected " + std::to_string(expected) + " rows, got " + std::to_string(rows.size()));
    std::size_t counts[4] = {};
    for (const auto& row : rows) {
        ++counts[static_cast<int>(row.verdict)];
        if (row.verdict == Verdict::budget_exceeded)
            o.fail("budget exceeded at n=" + std::to_string(row.n) + " k=" + std::to_string(row.k));
        if (is_proven_failure(row))
            o.fail("proven formula contradicted at n=" + std::to_string(row.n));
    }
    swept.insert(swept.end(), rows.begin(), rows.end());
    o.detail = std::to_string(rows.size()) + " rows: " + std::to_string(counts[0]) + " MATCH, " +
               std::to_string(counts[1]) + " MISMATCH, " + std::to_string(counts[2]) +
               " NOT-APPLICABLE; reruns byte-identical";
    return o;
}

Outcome witness_integrity()
{
    Outcome o;
    std::size_t cycles_audited = 0;
    for (const auto& s : ledger) {
        if (!is_weak_iasi(s.graph, s.result.witness) ||
            mono_indexed_edge_count(s.graph, s.result.witness) != s.result.phi)
            o.fail(s.where + ": witness invalid");
    }
    for (std::size_t n = 3; n <= 14; ++n) {
        Graph c = make_cycle(n);
        ParityAudit audit = parity_audit(c, 0, c, sparing_number(c).witness);
        cycles_audited += audit.cycles_checked;
        if (!audit.passed())
            o.fail(audit.violations.front());
    }
    for (const auto& row : swept) {
        if (!row.witness_valid)
            o.fail("sweep witness invalid at n=" + std::to_string(row.n));
        if (!row.parity || !row.parity->passed())
            o.fail("sweep parity at n=" + std::to_string(row.n) + " k=" + std::to_string(row.k));
        else
            cycles_audited += row.parity->cycles_checked;
    }
    o.detail = std::to_string(ledger.size() + swept.size()) + " witnesses, " + std::to_string(cycles_audited) +
               " cycles and ringlets parity-audited";
    return o;
}

Outcome performance()
{
    Outcome o;
    Graph g = k_sieve(make_cycle(50), 4);
    auto start = std::chrono::steady_clock::now();
    auto r = sparing_number(g);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (g.size() != 100)
        o.fail("expected 100 edges");
    if (!r.proven_optimal())
        o.fail("not proven optimal within the default budget");
    if (seconds >= 10.0)
        o.fail("took " + std::to_string(seconds) + " s");
    if (!is_weak_iasi(g, r.witness) || mono_indexed_edge_count(g, r.witness) != r.phi)
        o.fail("witness invalid");
    o.detail = "C_50^(4): phi = " + std::to_string(r.phi) + ", " + std::to_string(r.stats.nodes) + " nodes";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds; // 0 = no time limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "cycles", 1.0, cycles},
        {2, "complete graphs", 5.0, complete_graphs},
        {3, "bipartite graphs", 30.0, bipartite},
        {4, "reduction validity", 600.0, reduction_validity},
        {5, "solver vs set enumeration", 0.0, solver_vs_sets},
        {6, "2-sieve equals square", 60.0, remark_square},
        {7, "odd-k sieves of bipartite graphs", 0.0, odd_sieves_bipartite},
        {8, "odd-k cycle sieve harness", 0.0, odd_k_cycle_harness},
        {9, "even-k path/cycle sieve harness", 0.0, even_k_harness},
        {10, "witness integrity and parity", 0.0, witness_integrity},
        {11, "performance", 10.0, performance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds)
            o.fail("exceeded " + std::to_string(c.limit_seconds) + " s");
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
                  << timing << "]";
        if (!o.ok)
            std::cout << " -- " << o.problems.str();
        std::cout << std::endl;
        failures += !o.ok;
    }
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << (criteria.size() - failures) << "/" << criteria.size()
              << std::endl;
    return failures ? 1 : 0;
}
