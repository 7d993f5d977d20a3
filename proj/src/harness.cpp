#include "ksieve/harness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ksieve/errors.hpp"
#include "ksieve/generators.hpp"
#include "ksieve/io.hpp"
#include "ksieve/metrics.hpp"
#include "ksieve/rng.hpp"
#include "ksieve/sieve.hpp"

namespace ksieve {

using nlohmann::json;

std::size_t mono_edges_on_cycle(const Labeling& lab, const std::vector<Vertex>& cycle)
{
    std::size_t mono = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i];
        Vertex b = cycle[(i + 1) % cycle.size()];
        mono += sumset(lab.at(a), lab.at(b)).is_singleton();
    }
    return mono;
}

namespace {

bool is_cycle_graph(const Graph& g)
{
    if (g.order() < 3 || g.size() != g.order() || !is_connected(g))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

std::vector<Vertex> cycle_order(const Graph& g)
{
    std::vector<Vertex> walk{0};
    Vertex prev = 0, cur = g.neighbors(0).find_first();
    while (cur != 0) {
        walk.push_back(cur);
        Vertex next = g.neighbors(cur).find_first();
        if (next == prev)
            next = g.neighbors(cur).find_next(next);
        prev = cur;
        cur = next;
    }
    return walk;
}

std::string describe(const std::vector<Vertex>& cycle)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out << (i ? "-" : "") << cycle[i];
    return out.str();
}

} // namespace

ParityAudit parity_audit(const Graph& base, std::size_t k, const Graph& labeled, const Labeling& lab)
{
    ParityAudit audit;
    auto check = [&](const std::vector<Vertex>& cycle) {
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (!labeled.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
                throw DomainError("audited cycle " + describe(cycle) + " is not a cycle of the labeled graph");
        ++audit.cycles_checked;
        std::size_t mono = mono_edges_on_cycle(lab, cycle);
        if (mono % 2 != cycle.size() % 2)
            audit.violations.push_back("cycle " + describe(cycle) + " of length " + std::to_string(cycle.size()) +
                                       " has " + std::to_string(mono) + " mono-indexed edges");
    };

    if (is_cycle_graph(base))
        check(cycle_order(base));
    if (k >= 2) {
        auto census = ringlet_census(base, k);
        for (const Edge& e : census.added_edges)
            for (auto& path : geodesics(base, e.u, e.v))
                check(path);
    }
    return audit;
}

const char* to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::match: return "MATCH";
    case Verdict::mismatch: return "MISMATCH";
    case Verdict::not_applicable: return "NOT-APPLICABLE";
    case Verdict::budget_exceeded: return "BUDGET-EXCEEDED";
    }
    return "?";
}

namespace {

const std::set<std::string> known_families{"cycle",       "complete",   "bipartite",      "path-sieve",
                                           "cycle-sieve", "tree-sieve", "bipartite-sieve"};

bool is_random_family(const std::string& family)
{
    return family == "bipartite" || family == "tree-sieve" || family == "bipartite-sieve";
}

bool needs_k(const std::string& family)
{
    return family.ends_with("-sieve");
}

std::size_t get_size(const json& j, const char* key)
{
    if (!j.at(key).is_number_unsigned())
        throw FormatError(std::string("plan: \"") + key + "\" must be a non-negative integer");
    return j.at(key).get<std::size_t>();
}

// Seed for instance `index` of grid `grid`: one splitmix64 step, so nearby
// indices give unrelated streams.
std::uint64_t instance_seed(std::uint64_t plan_seed, std::size_t grid, std::size_t index)
{
    std::uint64_t z = plan_seed + 0x9e3779b97f4a7c15ull * (1 + (grid << 20) + index);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Plan plan_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("grids") || !j.at("grids").is_array())
        throw FormatError("plan must be an object with a \"grids\" array");
    Plan plan;
    try {
        if (j.contains("seed"))
            plan.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("budget"))
            plan.budget = j.at("budget").get<std::uint64_t>();
        for (const json& g : j.at("grids")) {
            Grid grid;
            grid.family = g.at("family").get<std::string>();
            if (!known_families.contains(grid.family))
                throw FormatError("plan: unknown family \"" + grid.family + "\"");
            const json& range = g.at("n");
            if (!range.is_array() || range.size() != 2)
                throw FormatError("plan: \"n\" must be [min, max]");
            grid.n_min = range[0].get<std::size_t>();
            grid.n_max = range[1].get<std::size_t>();
            if (grid.n_min > grid.n_max)
                throw FormatError("plan: empty n range");
            if (needs_k(grid.family)) {
                if (!g.contains("k") || !g.at("k").is_array() || g.at("k").empty())
                    throw FormatError("plan: family \"" + grid.family + "\" needs a non-empty \"k\" list");
                grid.ks = g.at("k").get<std::vector<std::size_t>>();
            }
            if (is_random_family(grid.family))
                grid.count = get_size(g, "count");
            if (g.contains("p"))
                grid.p = g.at("p").get<double>();
            if (g.contains("mode")) {
                auto mode = g.at("mode").get<std::string>();
                if (mode != "statement" && mode != "proof")
                    throw FormatError("plan: mode must be \"statement\" or \"proof\"");
                grid.mode = mode == "proof" ? PathSieveMode::proof : PathSieveMode::statement;
            }
            plan.grids.push_back(std::move(grid));
        }
    }
    catch (const json::exception& e) {
        throw FormatError(std::string("plan: ") + e.what());
    }
    return plan;
}

json plan_to_json(const Plan& plan)
{
    json grids = json::array();
    for (const Grid& g : plan.grids) {
        json entry{{"family", g.family}, {"n", {g.n_min, g.n_max}}};
        if (!g.ks.empty())
            entry["k"] = g.ks;
        if (is_random_family(g.family)) {
            entry["count"] = g.count;
            entry["p"] = g.p;
        }
        if (g.family == "path-sieve")
            entry["mode"] = g.mode == PathSieveMode::proof ? "proof" : "statement";
        grids.push_back(std::move(entry));
    }
    return json{{"seed", plan.seed}, {"budget", plan.budget}, {"grids", std::move(grids)}};
}

Plan default_plan()
{
    Plan plan;
    plan.seed = 20130801;
    plan.grids = {
        {"cycle", {}, 3, 14},
        {"complete", {}, 2, 10},
        {"bipartite", {}, 2, 16, 50},
        {"path-sieve", {3, 5}, 3, 20},
        {"path-sieve", {4, 6}, 4, 24},
        {"cycle-sieve", {3}, 7, 15},
        {"cycle-sieve", {5}, 11, 17},
        {"cycle-sieve", {4}, 8, 24},
        {"tree-sieve", {3, 5}, 4, 12, 20},
        {"bipartite-sieve", {3, 5}, 4, 12, 20},
    };
    return plan;
}

namespace {

struct Instance {
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    Graph base;
    Graph graph;
    FormulaResult formula;
};

FormulaResult odd_k_bipartite_claim(std::size_t k)
{
    if (k % 2 == 0)
        return not_applicable("odd-k-sieve-bipartite", FormulaStatus::hypothesis,
                              "no closed form for even k on general bipartite bases");
    FormulaResult r;
    r.source = "odd-k-sieve-bipartite";
    r.status = FormulaStatus::hypothesis;
    r.candidates.push_back({0, "odd k on a bipartite base", true});
    return r;
}

Graph random_bipartite_of_order(std::size_t n, double p, std::uint64_t seed)
{
    Rng pick(seed);
    std::size_t left = 1 + pick.below(n - 1);
    return make_random_bipartite(left, n - left, p, seed ^ 0x5bd1e995u);
}

std::vector<Instance> expand_grid(const Plan& plan, std::size_t index)
{
    const Grid& grid = plan.grids[index];
    std::vector<Instance> out;
    auto push = [&](std::size_t n, std::size_t k, std::uint64_t seed, Graph base, Graph graph, FormulaResult f) {
        out.push_back(Instance{grid.family, n, k, seed, std::move(base), std::move(graph), std::move(f)});
    };

    if (grid.family == "cycle") {
        for (std::size_t n = std::max<std::size_t>(grid.n_min, 3); n <= grid.n_max; ++n)
            push(n, 0, plan.seed, make_cycle(n), make_cycle(n), phi_cycle(n));
    }
    else if (grid.family == "complete") {
        for (std::size_t n = std::max<std::size_t>(grid.n_min, 1); n <= grid.n_max; ++n)
            push(n, 0, plan.seed, make_complete(n), make_complete(n), phi_complete(n));
    }
    else if (grid.family == "bipartite") {
        const std::size_t lo = std::max<std::size_t>(grid.n_min, 2);
        for (std::size_t i = 0; i < grid.count; ++i) {
            std::uint64_t seed = instance_seed(plan.seed, index, i);
            std::size_t n = lo + Rng(seed).below(grid.n_max - lo + 1);
            Graph g = random_bipartite_of_order(n, grid.p, seed);
            push(n, 0, seed, g, g, phi_bipartite());
        }
    }
    else if (grid.family == "path-sieve") {
        for (std::size_t k : grid.ks)
            for (std::size_t n = std::max(grid.n_min, k); n <= grid.n_max; ++n) {
                Graph base = make_path(n);
                push(n, k, plan.seed, base, k_sieve(base, k), phi_path_sieve(n, k, grid.mode));
            }
    }
    else if (grid.family == "cycle-sieve") {
        for (std::size_t k : grid.ks)
            for (std::size_t n = std::max<std::size_t>(grid.n_min, 3); n <= grid.n_max; ++n) {
                Graph base = make_cycle(n);
                FormulaResult f = k % 2 ? phi_cycle_sieve_odd_k(n, k) : phi_cycle_sieve_even_k(n, k);
                push(n, k, plan.seed, base, k_sieve(base, k), std::move(f));
            }
    }
    else { // tree-sieve, bipartite-sieve
        const std::size_t lo = std::max<std::size_t>(grid.n_min, 2);
        for (std::size_t k : grid.ks)
            for (std::size_t i = 0; i < grid.count; ++i) {
                std::uint64_t seed = instance_seed(plan.seed, index, k * 100000 + i);
                std::size_t n = lo + Rng(seed).below(grid.n_max - lo + 1);
                Graph base = grid.family == "tree-sieve" ? make_random_tree(n, seed)
                                                         : random_bipartite_of_order(n, grid.p, seed);
                push(n, k, seed, base, k_sieve(base, k), odd_k_bipartite_claim(k));
            }
    }
    return out;
}

TheoremReport evaluate(Instance inst, std::uint64_t budget)
{
    TheoremReport row;
    row.family = inst.family;
    row.n = inst.n;
    row.k = inst.k;
    row.seed = inst.seed;
    row.vertices = inst.graph.order();
    row.edges = inst.graph.size();
    row.bipartite = is_bipartite(inst.graph);
    row.formula = std::move(inst.formula);
    row.status = row.formula.status;
    if (row.formula.value() == 0 && row.bipartite)
        row.status = FormulaStatus::proven_elementary;

    SparingResult solved = sparing_number(inst.graph, budget);
    row.solver_value = solved.phi;
    row.solver_lower_bound = solved.phi_lower_bound;
    row.nodes = solved.stats.nodes;
    row.witness = solved.witness;
    row.witness_valid = is_weak_iasi(inst.graph, solved.witness) &&
                        mono_indexed_edge_count(inst.graph, solved.witness) == solved.phi;
    if (inst.k >= 2 || inst.family == "cycle")
        row.parity = parity_audit(inst.base, inst.k, inst.graph, solved.witness);

    if (!row.formula.applicable())
        row.verdict = Verdict::not_applicable;
    else if (!solved.proven_optimal())
        row.verdict = Verdict::budget_exceeded;
    else
        row.verdict = row.formula.matches(static_cast<std::int64_t>(solved.phi)) ? Verdict::match : Verdict::mismatch;
    return row;
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string candidates_text(const FormulaResult& f)
{
    std::string out;
    for (const auto& c : f.candidates) {
        if (!out.empty())
            out += " | ";
        out += std::to_string(c.value) + " [" + c.case_tag + (c.strict ? "" : ", non-strict") + "]";
    }
    return out;
}

json row_to_json(const TheoremReport& row)
{
    json out{{"family", row.family},
             {"n", row.n},
             {"k", row.k},
             {"seed", row.seed},
             {"vertices", row.vertices},
             {"edges", row.edges},
             {"formula", formula_to_json(row.formula)},
             {"status", to_string(row.status)},
             {"bipartite", row.bipartite},
             {"solver_value", row.solver_value},
             {"solver_lower_bound", row.solver_lower_bound},
             {"verdict", to_string(row.verdict)},
             {"nodes", row.nodes},
             {"witness_valid", row.witness_valid},
             {"witness", labeling_to_json(row.witness)}};
    if (row.parity)
        out["parity"] = {{"cycles_checked", row.parity->cycles_checked}, {"violations", row.parity->violations}};
    return out;
}

} // namespace

std::vector<TheoremReport> sweep(const Plan& plan)
{
    std::vector<TheoremReport> rows;
    for (std::size_t i = 0; i < plan.grids.size(); ++i)
        for (Instance& inst : expand_grid(plan, i))
            rows.push_back(evaluate(std::move(inst), plan.budget));
    return rows;
}

bool is_proven_failure(const TheoremReport& row)
{
    return row.status == FormulaStatus::proven_elementary && row.verdict == Verdict::mismatch;
}

bool is_internal_failure(const TheoremReport& row)
{
    return !row.witness_valid || (row.parity && !row.parity->passed());
}

std::string reports_csv(const std::vector<TheoremReport>& rows)
{
    std::ostringstream out;
    out << "family,n,k,seed,vertices,edges,source,status,formula_value,formula_candidates,"
           "solver_value,solver_lower_bound,verdict,nodes,witness_valid,parity,witness\n";
    for (const TheoremReport& row : rows) {
        auto value = row.formula.value();
        std::string parity = row.parity ? (row.parity->passed() ? "ok" : "FAIL") + std::string(":") +
                                              std::to_string(row.parity->cycles_checked)
                                        : "";
        bool embed = row.verdict == Verdict::mismatch || row.verdict == Verdict::budget_exceeded;
        out << row.family << ',' << row.n << ',' << row.k << ',' << row.seed << ',' << row.vertices << ','
            << row.edges << ',' << row.formula.source << ',' << to_string(row.status) << ','
            << (value ? std::to_string(*value) : "NOT-APPLICABLE") << ','
            << csv_field(candidates_text(row.formula)) << ',' << row.solver_value << ',' << row.solver_lower_bound
            << ',' << to_string(row.verdict) << ',' << row.nodes << ',' << (row.witness_valid ? "yes" : "no") << ','
            << parity << ',' << (embed ? csv_field(labeling_to_json(row.witness).dump()) : "") << '\n';
    }
    return out.str();
}

json reports_json(const Plan& plan, const std::vector<TheoremReport>& rows)
{
    json list = json::array();
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const TheoremReport& row : rows) {
        list.push_back(row_to_json(row));
        ++counts[static_cast<int>(row.verdict)];
    }
    return json{{"format_version", format_version},
                {"plan", plan_to_json(plan)},
                {"summary",
                 {{"rows", rows.size()},
                  {"MATCH", counts[0]},
                  {"MISMATCH", counts[1]},
                  {"NOT-APPLICABLE", counts[2]},
                  {"BUDGET-EXCEEDED", counts[3]}}},
                {"rows", std::move(list)}};
}

} // namespace ksieve
