#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "einject/family.hpp"
#include "einject/graph_io.hpp"
#include "einject/harness.hpp"
#include "einject/metrics.hpp"
#include "einject/solver.hpp"

namespace einject {

namespace {

using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> env_number(const char* name) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    auto v = std::strtoull(raw, &end, 10);
    if (*end) throw UsageError(std::string(name) + " must be a non-negative integer");
    return v;
}

struct BudgetFlags {
    std::optional<std::uint64_t> ms, nodes;
    unsigned workers = 1;

    void attach(CLI::App* app) {
        app->add_option("--budget-ms", ms, "time budget in milliseconds (0 = none)");
        app->add_option("--budget-nodes", nodes, "search node budget (0 = none)");
        app->add_option("--workers", workers, "solver threads")->check(CLI::PositiveNumber);
    }

    // Flags beat the environment, which beats the built-in default.
    SolveOptions options() const {
        SolveOptions o;
        auto pick = [](std::optional<std::uint64_t> flag, const char* env) {
            return flag ? flag : env_number(env);
        };
        if (auto v = pick(ms, "EINJECT_BUDGET_MS"))
            o.budget.time = *v ? std::optional(std::chrono::milliseconds(*v)) : std::nullopt;
        if (auto v = pick(nodes, "EINJECT_BUDGET_NODES"))
            o.budget.nodes = *v ? std::optional(*v) : std::nullopt;
        o.workers = workers;
        return o;
    }
};

struct FormatFlags {
    bool json = false, dot = false, col = false;

    void attach(CLI::App* app) {
        auto* j = app->add_flag("--json", json, "JSON output (default)");
        auto* d = app->add_flag("--dot", dot, "Graphviz DOT output");
        auto* c = app->add_flag("--col", col, "DIMACS col output");
        j->excludes(d)->excludes(c);
        d->excludes(c);
    }

    void write(const Graph& g, std::ostream& out, const std::string& name) const {
        if (dot) write_dot(g, out, name);
        else if (col) write_dimacs_col(g, out);
        else out << to_json(g).dump() << '\n';
    }
};

Graph load(const std::string& path, std::istream& in) {
    return path == "-" ? read_graph(in) : read_graph_file(path);
}

Mode mode_of(const std::string& s) {
    try {
        return parse_mode(s);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

void report_elapsed(std::ostream& err, Clock::time_point start) {
    auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    err << "elapsed " << std::fixed << std::setprecision(1) << ms << " ms\n";
}

nlohmann::json violation_json(const Violation& v) {
    return {{"kind", std::string(to_string(v.kind))}, {"witness", v.witness}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"e-injective coloring toolkit"};
    app.require_subcommand(1);

    std::string spec_text, input, which, coloring_path, mode_text = "einjective", output = "-";
    FormatFlags fmt;
    BudgetFlags budget;

    auto* gen = app.add_subcommand("gen", "generate a family instance");
    gen->add_option("spec", spec_text, "family, e.g. cycle:7 or torus:3x5")->required();
    fmt.attach(gen);

    auto* transform = app.add_subcommand("transform", "derived graph of the input");
    transform->add_option("input", input, "graph file, - for stdin")->required();
    transform->add_option("which", which, "s3, square or twostep")
        ->required()
        ->check(CLI::IsMember({"s3", "square", "twostep"}));
    fmt.attach(transform);

    auto* solve = app.add_subcommand("solve", "exact chromatic number under a coloring mode");
    solve->add_option("input", input, "graph file, - for stdin")->required();
    solve->add_option("--mode", mode_text, "proper, injective, twodistance or einjective");
    budget.attach(solve);

    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("input", input, "graph file, - for stdin")->required();
    verify->add_option("coloring", coloring_path, "JSON array of colors")->required();
    verify->add_option("--mode", mode_text, "proper, injective, twodistance or einjective");

    auto* metrics = app.add_subcommand("metrics", "packing, open packing and 2-distance domination");
    metrics->add_option("input", input, "graph file, - for stdin")->required();

    std::vector<std::string> claim_ids, specs, graph_files;
    std::string m_text, n_text;
    bool check_json = false;
    unsigned jobs = 1;
    auto* check_cmd = app.add_subcommand("check", "run theorem checks");
    check_cmd->add_option("claims", claim_ids, "claim ids; all when omitted");
    check_cmd->add_option("--m", m_text, "first parameter range a..b");
    check_cmd->add_option("--n", n_text, "second (or only) parameter range a..b");
    check_cmd->add_option("--spec", specs, "check these family instances instead of the grid");
    check_cmd->add_option("--graphs", graph_files, "inputs for graph and pair claims");
    check_cmd->add_flag("--json", check_json, "JSON lines instead of a table");
    check_cmd->add_option("--jobs", jobs, "checks run in parallel")->check(CLI::PositiveNumber);
    budget.attach(check_cmd);

    int k = 0;
    auto* cnf = app.add_subcommand("export-cnf", "k-colorability of the derived graph as DIMACS CNF");
    cnf->add_option("input", input, "graph file, - for stdin")->required();
    cnf->add_option("--mode", mode_text, "proper, injective, twodistance or einjective");
    cnf->add_option("--k", k, "number of colors")->required()->check(CLI::PositiveNumber);
    cnf->add_option("-o,--output", output, "output file, - for stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto start = Clock::now();
    try {
        if (gen->parsed()) {
            auto spec = parse_family(spec_text);
            fmt.write(generate(spec), out, "G");
            return 0;
        }
        if (transform->parsed()) {
            const Graph g = load(input, in);
            Graph h = which == "s3" ? three_step_graph(g) : which == "square" ? square_graph(g)
                                                                              : two_step_graph(g);
            fmt.write(h, out, which);
            return 0;
        }
        if (solve->parsed()) {
            const Mode mode = mode_of(mode_text);
            const Graph g = load(input, in);
            auto r = chromatic_number(g, mode, budget.options());
            out << to_json(r).dump() << '\n';
            report_elapsed(err, start);
            if (!r.chi) err << "budget exhausted; bounds " << r.lower_bound << ".." << r.upper_bound << '\n';
            return 0;
        }
        if (verify->parsed()) {
            const Mode mode = mode_of(mode_text);
            if (input == "-" && coloring_path == "-") throw UsageError("only one input may be stdin");
            const Graph g = load(input, in);
            nlohmann::json cj;
            if (coloring_path == "-") {
                in >> cj;
            } else {
                std::ifstream f(coloring_path);
                if (!f) throw UsageError("cannot open " + coloring_path);
                f >> cj;
            }
            Coloring c{colors_from_json(cj), mode};
            auto bad = verify_coloring(g, c, mode);
            nlohmann::json j{{"valid", bad.empty()}, {"mode", std::string(to_string(mode))},
                             {"violations", nlohmann::json::array()}};
            for (const auto& v : bad) j["violations"].push_back(violation_json(v));
            out << j.dump() << '\n';
            return bad.empty() ? 0 : 1;
        }
        if (metrics->parsed()) {
            const Graph g = load(input, in);
            nlohmann::json j{{"packing", to_json(packing_number(g))},
                             {"open_packing", to_json(open_packing_number(g))},
                             {"two_distance_domination", to_json(two_distance_domination_number(g))}};
            out << j.dump() << '\n';
            return 0;
        }
        if (check_cmd->parsed()) {
            const auto opts = budget.options();
            SuiteFilter filter;
            if (!m_text.empty()) filter.m = parse_range(m_text);
            if (!n_text.empty()) filter.n = parse_range(n_text);
            for (const auto& f : graph_files) filter.graphs.push_back(load(f, in));
            if (claim_ids.empty())
                for (const auto& c : claims()) claim_ids.push_back(c.id);
            for (const auto& c : claim_ids) claim_info(c);

            std::vector<CheckReport> reports;
            if (!specs.empty()) {
                // explicit instances go to every named family claim that covers them
                for (const auto& text : specs) {
                    auto spec = parse_family(text);
                    bool used = false;
                    for (const auto& c : claim_ids) {
                        if (claim_info(c).arity != ClaimArity::Family) continue;
                        try {
                            reports.push_back(check(c, spec, opts));
                            used = true;
                        } catch (const std::invalid_argument&) {
                        }
                    }
                    if (!used) throw UsageError("no selected claim covers " + text);
                }
            } else {
                filter.claims = claim_ids;
                reports = run_suite(filter, opts, jobs);
            }
            if (check_json) {
                for (const auto& r : reports) out << to_json(r).dump() << '\n';
            } else {
                write_table(reports, out);
            }
            report_elapsed(err, start);
            return suite_exit_status(reports);
        }
        if (cnf->parsed()) {
            const Mode mode = mode_of(mode_text);
            const Graph h = derived_graph(load(input, in), mode);
            if (output == "-") {
                export_cnf(h, k, out);
            } else {
                std::ofstream f(output);
                if (!f) throw UsageError("cannot write " + output);
                export_cnf(h, k, f);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        // bad files, bad specs and out-of-range parameters all land here
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace einject
