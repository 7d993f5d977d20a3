#include "ksieve/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ksieve/errors.hpp"
#include "ksieve/formulas.hpp"
#include "ksieve/generators.hpp"
#include "ksieve/harness.hpp"
#include "ksieve/iasi.hpp"
#include "ksieve/io.hpp"
#include "ksieve/sieve.hpp"
#include "ksieve/sparing.hpp"

namespace ksieve::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandConfig {
    std::string input;
    std::string output;

    // gen
    std::string family;
    std::optional<std::size_t> n, m, length;
    double p = 0.35;
    std::uint64_t seed = 1;

    // sieve / power / formula
    std::size_t k = 0;
    std::size_t r = 0;
    std::string census;
    std::string mode = "statement";

    // sparing
    std::string oracle = "bb";
    std::uint64_t budget = default_budget;
    std::size_t universe = 16;

    // label / export
    std::string labeling;
    std::vector<Vertex> nonsingleton;
    bool nonsingleton_given = false;
    std::string format = "dot";
    bool no_label = false;

    // sweep
    std::string plan;
    std::string out_dir;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
};

json load_json(const std::string& path, Streams& io, const std::string& what)
{
    if (path.empty() || path == "-")
        return read_json(io.in, what);
    std::ifstream file(path);
    if (!file)
        throw FormatError("cannot open " + path);
    return read_json(file, what);
}

Graph load_graph(const std::string& path, Streams& io)
{
    return graph_from_json(load_json(path, io, "graph JSON"));
}

void emit(const std::string& text, const std::string& path, Streams& io)
{
    if (path.empty() || path == "-") {
        io.out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw FormatError("cannot write " + path);
    file << text;
}

std::size_t need(const std::optional<std::size_t>& value, const char* flag, const std::string& family)
{
    if (!value)
        throw UsageError("gen " + family + " requires " + flag);
    return *value;
}

Graph generate(const CommandConfig& cfg)
{
    const std::string& f = cfg.family;
    if (f == "path")
        return make_path(need(cfg.length, "--length", f));
    if (f == "cycle")
        return make_cycle(need(cfg.n, "--n", f));
    if (f == "complete")
        return make_complete(need(cfg.n, "--n", f));
    if (f == "complete-bipartite")
        return make_complete_bipartite(need(cfg.m, "--m", f), need(cfg.n, "--n", f));
    if (f == "star")
        return make_star(need(cfg.n, "--n", f));
    if (f == "tree")
        return make_random_tree(need(cfg.n, "--n", f), cfg.seed);
    if (f == "connected")
        return make_random_connected(need(cfg.n, "--n", f), cfg.p, cfg.seed);
    if (f == "bipartite")
        return make_random_bipartite(need(cfg.m, "--m", f), need(cfg.n, "--n", f), cfg.p, cfg.seed);
    throw UsageError("unknown family " + f);
}

json stats_json(const SolverStats& stats)
{
    return json{{"nodes", stats.nodes}, {"seconds", stats.seconds}};
}

int run_sparing(const CommandConfig& cfg, Streams& io)
{
    Graph g = load_graph(cfg.input, io);
    json out;
    int code = exit_ok;
    if (cfg.oracle == "labelings") {
        auto res = sparing_number_bruteforce_labelings(g, cfg.universe);
        if (!res.phi)
            throw DomainError("no valid weak IASI with labels inside {0.." + std::to_string(cfg.universe - 1) + "}");
        std::vector<Vertex> wide;
        for (const auto& [v, label] : res.witness->vertex_labels())
            if (!label.is_singleton())
                wide.push_back(v);
        out = {{"oracle", "labelings"},
               {"universe", cfg.universe},
               {"phi", *res.phi},
               {"status", "optimal"},
               {"optimal_set", wide},
               {"witness", labeling_to_json(*res.witness)},
               {"stats", {{"nodes", res.nodes}}}};
    }
    else {
        SparingResult res = cfg.oracle == "sets" ? sparing_number_bruteforce_sets(g) : sparing_number(g, cfg.budget);
        out = {{"oracle", cfg.oracle},
               {"phi", res.phi},
               {"phi_lower_bound", res.phi_lower_bound},
               {"status", to_string(res.status)},
               {"optimal_set", res.optimal_set},
               {"witness", labeling_to_json(res.witness)},
               {"stats", stats_json(res.stats)}};
        if (!res.proven_optimal())
            code = exit_budget;
    }
    emit(out.dump(2) + "\n", cfg.output, io);
    return code;
}

int run_label(const CommandConfig& cfg, Streams& io)
{
    Graph g = load_graph(cfg.input, io);
    if (cfg.nonsingleton_given == !cfg.labeling.empty())
        throw UsageError("label needs exactly one of --labeling or --nonsingleton");
    if (cfg.nonsingleton_given) {
        Labeling lab = synthesize_labeling(g, make_set(g.order(), cfg.nonsingleton));
        emit(labeling_to_json(lab).dump() + "\n", cfg.output, io);
        return exit_ok;
    }
    Labeling lab = labeling_from_json(load_json(cfg.labeling, io, "labeling JSON"));
    LabelingReport report = validate(g, lab);
    json mono = json::array();
    for (const Edge& e : report.mono_edge_list)
        mono.push_back({e.u, e.v});
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"edge", {e.u, e.v}}, {"label", lab.edge_label(e).elements()}});
    json out{{"iasi", report.iasi},
             {"weak_iasi", report.weak},
             {"mono_indexed_edges", report.mono_edges},
             {"mono_indexed_vertices", report.mono_vertices},
             {"mono_edge_list", std::move(mono)},
             {"edge_labels", std::move(edges)}};
    emit(out.dump(2) + "\n", cfg.output, io);
    return exit_ok;
}

int run_export(const CommandConfig& cfg, Streams& io)
{
    Graph g = load_graph(cfg.input, io);
    if (cfg.format == "json") {
        emit(write_graph(g), cfg.output, io);
        return exit_ok;
    }
    if (cfg.no_label) {
        emit(to_dot(g), cfg.output, io);
        return exit_ok;
    }
    Labeling lab = cfg.labeling.empty() ? sparing_number(g, cfg.budget).witness
                                        : labeling_from_json(load_json(cfg.labeling, io, "labeling JSON"));
    lab.require_covers(g);
    emit(labeled_dot(g, lab), cfg.output, io);
    return exit_ok;
}

int run_formula(const CommandConfig& cfg, Streams& io)
{
    const std::string& f = cfg.family;
    auto n = [&] { return need(cfg.n, "--n", f); };
    FormulaResult r;
    if (f == "cycle")
        r = phi_cycle(n());
    else if (f == "complete")
        r = phi_complete(n());
    else if (f == "bipartite")
        r = phi_bipartite();
    else if (f == "path-sieve")
        r = phi_path_sieve(n(), cfg.k, cfg.mode == "proof" ? PathSieveMode::proof : PathSieveMode::statement);
    else if (f == "cycle-sieve")
        r = cfg.k % 2 ? phi_cycle_sieve_odd_k(n(), cfg.k) : phi_cycle_sieve_even_k(n(), cfg.k);
    else
        throw UsageError("unknown formula family " + f);
    emit(formula_to_json(r).dump(2) + "\n", cfg.output, io);
    return exit_ok;
}

int run_sweep(const CommandConfig& cfg, Streams& io, std::ostream& err)
{
    Plan plan = cfg.plan.empty() ? default_plan() : plan_from_json(load_json(cfg.plan, io, "plan JSON"));
    fs::create_directories(cfg.out_dir);
    auto rows = sweep(plan);

    std::ofstream(fs::path(cfg.out_dir) / "report.csv") << reports_csv(rows);
    std::ofstream(fs::path(cfg.out_dir) / "report.json") << reports_json(plan, rows).dump(2) << "\n";

    std::size_t proven = 0, internal = 0, mismatches = 0;
    for (const auto& row : rows) {
        proven += is_proven_failure(row);
        internal += is_internal_failure(row);
        mismatches += row.verdict == Verdict::mismatch;
    }
    err << "sweep: " << rows.size() << " rows, " << mismatches << " mismatches (" << proven
        << " on proven formulas), " << internal << " internal failures\n";
    if (internal)
        return exit_internal;
    return proven ? exit_proven_mismatch : exit_ok;
}

// Output files must land in an existing directory.
const auto WritablePath = CLI::Validator(
    [](std::string& path) -> std::string {
        if (path == "-")
            return {};
        fs::path parent = fs::path(path).parent_path();
        if (!parent.empty() && !fs::is_directory(parent))
            return "directory " + parent.string() + " does not exist";
        return {};
    },
    "PATH");

const auto InputPath = CLI::Validator(
    [](std::string& path) -> std::string {
        if (path == "-")
            return {};
        return CLI::ExistingFile(path);
    },
    "FILE");

void add_io(CLI::App* cmd, CommandConfig& cfg)
{
    cmd->add_option("-i,--input", cfg.input, "Graph JSON (default: stdin)")->check(InputPath);
    cmd->add_option("-o,--output", cfg.output, "Output file (default: stdout)")->check(WritablePath);
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CommandConfig cfg;
    CLI::App app{"k-sieve graphs and sparing numbers of weak IASI graphs", "ksieve"};
    app.set_version_flag("--version", std::string("ksieve ") + version + " (format " + format_version + ")");
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("family", cfg.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "complete-bipartite", "star", "tree", "connected",
                               "bipartite"}));
    gen->add_option("--n", cfg.n, "Vertex count (second side for bipartite families, leaves for star)");
    gen->add_option("--m", cfg.m, "First side size for bipartite families");
    gen->add_option("--length", cfg.length, "Path length in edges (vertices = length + 1)");
    gen->add_option("--p", cfg.p, "Edge probability for random families")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", cfg.seed, "Seed for random families");
    gen->add_option("-o,--output", cfg.output, "Output file (default: stdout)")->check(WritablePath);

    auto* sieve = app.add_subcommand("sieve", "k-sieve of a graph");
    add_io(sieve, cfg);
    sieve->add_option("--k", cfg.k, "Sieve distance (>= 2)")->required();
    sieve->add_option("--census", cfg.census, "Write the ringlet census CSV here")->check(WritablePath);

    auto* power = app.add_subcommand("power", "r-th power of a graph");
    add_io(power, cfg);
    power->add_option("--r", cfg.r, "Power (>= 1)")->required();

    auto* sparing = app.add_subcommand("sparing", "Sparing number with a witness weak IASI");
    add_io(sparing, cfg);
    sparing->add_option("--oracle", cfg.oracle, "bb (branch and bound), sets or labelings")
        ->check(CLI::IsMember({"bb", "sets", "labelings"}));
    sparing->add_option("--budget", cfg.budget, "Branch-and-bound node budget");
    sparing->add_option("--universe", cfg.universe, "Label elements drawn from 0..universe-1 (labelings oracle)");

    auto* label = app.add_subcommand("label", "Validate a labeling or synthesize one");
    add_io(label, cfg);
    label->add_option("--labeling", cfg.labeling, "Labeling JSON to validate")->check(InputPath);
    label->add_option("--nonsingleton", cfg.nonsingleton, "Independent vertices to give 2-element labels")
        ->delimiter(',')
        ->expected(0, -1)
        ->each([&](const std::string&) { cfg.nonsingleton_given = true; });
    label->add_flag_callback("--all-singleton", [&] { cfg.nonsingleton_given = true; },
                             "Synthesize the all-singleton labeling");

    auto* formula = app.add_subcommand("formula", "Closed-form sparing number");
    formula->add_option("--family", cfg.family, "Formula family")
        ->required()
        ->check(CLI::IsMember({"path-sieve", "cycle-sieve", "cycle", "complete", "bipartite"}));
    formula->add_option("--n", cfg.n, "Path length, cycle order or vertex count");
    formula->add_option("--k", cfg.k, "Sieve distance");
    formula->add_option("--mode", cfg.mode, "Path-sieve decomposition")->check(CLI::IsMember({"statement", "proof"}));
    formula->add_option("-o,--output", cfg.output, "Output file (default: stdout)")->check(WritablePath);

    auto* sweep_cmd = app.add_subcommand("sweep", "Compare formulas with the exact solver over a plan");
    sweep_cmd->add_option("--plan", cfg.plan, "Plan JSON (default: built-in plan)")->check(CLI::ExistingFile);
    sweep_cmd->add_option("--out", cfg.out_dir, "Report directory")->required()->check(WritablePath);

    auto* export_cmd = app.add_subcommand("export", "Export a graph as DOT (with witness labels) or JSON");
    add_io(export_cmd, cfg);
    auto* dot_flag = export_cmd->add_flag_callback("--dot", [&] { cfg.format = "dot"; }, "DOT output (default)");
    export_cmd->add_flag_callback("--json", [&] { cfg.format = "json"; }, "Canonical graph JSON")->excludes(dot_flag);
    export_cmd->add_option("--labeling", cfg.labeling, "Labeling to render (default: optimal witness)")
        ->check(InputPath);
    export_cmd->add_flag("--no-label", cfg.no_label, "Plain DOT without labels");
    export_cmd->add_option("--budget", cfg.budget, "Node budget for the default witness");

    std::vector<std::string> argv_store{"ksieve"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    if (!args.empty() && !args[0].starts_with("-")) {
        auto known = app.get_subcommands([&](const CLI::App* sub) { return sub->get_name() == args[0]; });
        if (known.empty()) {
            err << "usage error: unknown subcommand '" << args[0] << "'\n"
                << "Run with --help for more information.\n";
            return exit_usage;
        }
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    Streams io{in, out};
    try {
        if (gen->parsed()) {
            emit(write_graph(generate(cfg)), cfg.output, io);
            return exit_ok;
        }
        if (sieve->parsed()) {
            Graph g = load_graph(cfg.input, io);
            Graph s = k_sieve(g, cfg.k);
            if (!cfg.census.empty())
                emit(census_csv(ringlet_census(g, cfg.k)), cfg.census, io);
            emit(write_graph(s), cfg.output, io);
            return exit_ok;
        }
        if (power->parsed()) {
            emit(write_graph(graph_power(load_graph(cfg.input, io), cfg.r)), cfg.output, io);
            return exit_ok;
        }
        if (sparing->parsed())
            return run_sparing(cfg, io);
        if (label->parsed())
            return run_label(cfg, io);
        if (formula->parsed())
            return run_formula(cfg, io);
        if (sweep_cmd->parsed())
            return run_sweep(cfg, io, err);
        if (export_cmd->parsed())
            return run_export(cfg, io);
    }
    catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const FormatError& e) {
        err << "input format error: " << e.what() << "\n";
        return exit_format;
    }
    catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_domain;
    }
    catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

} // namespace ksieve::cli
