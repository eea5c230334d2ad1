#include "radiolabel/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "radiolabel/bounds.hpp"
#include "radiolabel/constructive.hpp"
#include "radiolabel/io.hpp"
#include "radiolabel/solver.hpp"

namespace radiolabel::cli {

namespace {

struct FamilyOptions {
    std::string family;
    std::optional<int> n;
    std::optional<int> m;

    void add_to(CLI::App& cmd, bool required) {
        auto* f = cmd.add_option("--family", family, "complete | star | complete_bipartite | wheel | gear");
        if (required)
            f->required();
        cmd.add_option("--n", n, "family order");
        cmd.add_option("--m", m, "first partition size (complete_bipartite)");
    }

    bool given() const { return !family.empty(); }

    FamilySpec spec() const {
        const Family fam = parse_family(family);
        if (!n)
            throw Error(ErrorKind::InvalidParameter, "--n is required for --family " + family);
        if (fam == Family::CompleteBipartite && !m)
            throw Error(ErrorKind::InvalidParameter, "--m is required for --family complete_bipartite");
        if (fam != Family::CompleteBipartite && m)
            throw Error(ErrorKind::InvalidParameter, "--m only applies to complete_bipartite");
        FamilySpec s{fam, *n, m.value_or(0)};
        validate(s);
        return s;
    }
};

// "60s", "250ms", "2m", "1h"; a bare number is seconds.
std::chrono::milliseconds parse_duration(const std::string& text) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidParameter, "cannot parse duration '" + text + "'");
    }
    const std::string unit = text.substr(used);
    double ms = 0;
    if (unit.empty() || unit == "s")
        ms = value * 1000.0;
    else if (unit == "ms")
        ms = value;
    else if (unit == "m")
        ms = value * 60'000.0;
    else if (unit == "h")
        ms = value * 3'600'000.0;
    else
        throw Error(ErrorKind::InvalidParameter, "unknown duration unit in '" + text + "'");
    if (ms <= 0)
        throw Error(ErrorKind::InvalidParameter, "duration must be positive: '" + text + "'");
    return std::chrono::milliseconds(static_cast<long long>(ms));
}

// Reads --graph and --labeling once each; "-" for both shares one stdin read.
struct InputDocs {
    std::istream& in;
    std::optional<Json> stdin_doc;

    Json load(const std::string& path) {
        if (path != "-")
            return read_json(path, in);
        if (!stdin_doc)
            stdin_doc = read_json("-", in);
        return *stdin_doc;
    }
};

int cmd_gen(const FamilyOptions& fam, const std::string& format, std::ostream& out) {
    const Graph g = build(fam.spec());
    if (format == "dot")
        out << to_dot(g);
    else
        out << to_json(g).dump(2) << "\n";
    return kOk;
}

int cmd_label(const FamilyOptions& fam, const std::string& format, bool show_positions, std::ostream& out,
              std::ostream& err) {
    const FamilySpec spec = fam.spec();
    const Graph g = build(spec);
    const Labeling c = spec.family == Family::Gear ? label_gear(g) : label_family(spec);

    std::optional<PositionAssignment> positions;
    if (show_positions) {
        if (spec.family != Family::Gear)
            throw Error(ErrorKind::InvalidParameter, "--show-positions applies to gears only");
        if (spec.n < kGearConstructionMin)
            err << "note: gear n=" << spec.n << " uses a stored labeling; positions are shown for reference only\n";
        positions = gear_positions(g);
    }

    if (format == "dot") {
        out << to_dot(g, &c, positions ? &*positions : nullptr);
        return kOk;
    }
    Json doc = to_json(g);
    const Json labels = to_json(c, positions ? &*positions : nullptr);
    for (const auto& [key, value] : labels.items())
        doc[key] = value;
    out << doc.dump(2) << "\n";
    return kOk;
}

int cmd_verify(const std::string& graph_path, const std::optional<std::string>& labeling_path, bool fail_fast,
               std::istream& in, std::ostream& out, std::ostream& err) {
    InputDocs docs{in, std::nullopt};
    const Json graph_doc = docs.load(graph_path);
    const Graph g = graph_from_json(graph_doc);
    const Json label_doc = labeling_path ? docs.load(*labeling_path) : graph_doc;
    const Labeling c = labeling_from_json(label_doc);

    std::vector<Violation> violations;
    try {
        violations = check(g, g.distances(), c, fail_fast);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidLabeling)
            throw;
        err << "radiolabel verify: " << e.what() << "\n";
        return kVerificationFailed;
    }
    for (const auto& v : violations)
        out << format_violation(v) << "\n";
    if (!violations.empty()) {
        out << "invalid: " << violations.size() << (fail_fast ? "+" : "") << " violation(s)\n";
        return kVerificationFailed;
    }
    out << "valid: span=" << span(c) << " diam=" << g.diameter() << "\n";
    return kOk;
}

int cmd_bound(const FamilyOptions& fam, const std::optional<std::string>& graph_path, const std::string& method,
              std::istream& in, std::ostream& out) {
    if (fam.given() == graph_path.has_value())
        throw Error(ErrorKind::InvalidParameter, "bound needs exactly one of --family or --graph");

    if (method == "gear") {
        if (!fam.given() || parse_family(fam.family) != Family::Gear)
            throw Error(ErrorKind::InvalidParameter, "--method gear needs --family gear");
        out << to_json(lower_bound_gear(fam.spec().n)).dump(2) << "\n";
        return kOk;
    }
    const Graph g = fam.given() ? build(fam.spec()) : graph_from_json(read_json(*graph_path, in));
    const BoundReport report = method == "ecc" ? lower_bound_ecc_gap(g, g.distances()) : lower_bound_trivial(g);
    out << to_json(report).dump(2) << "\n";
    return kOk;
}

int cmd_solve(const FamilyOptions& fam, const std::optional<std::string>& graph_path, const SolverConfig& cfg,
              std::istream& in, std::ostream& out) {
    if (fam.given() == graph_path.has_value())
        throw Error(ErrorKind::InvalidParameter, "solve needs exactly one of --graph or --family");
    const Graph g = fam.given() ? build(fam.spec()) : graph_from_json(read_json(*graph_path, in));
    const SolveResult result = solve(g, g.distances(), cfg);
    out << to_json(result).dump(2) << "\n";
    return result.solved() ? kOk : kInconclusive;
}

struct TableOptions {
    std::string families = "all";
    int max_n = 9;
    int gear_solver_max_n = 6;
    int solver_max_vertices = 13;
    std::string time_budget = "120s";
    unsigned workers = 1;
};

std::vector<FamilySpec> table_instances(Family f, int max_n) {
    std::vector<FamilySpec> out;
    switch (f) {
    case Family::Complete:
        for (int n = 1; n <= max_n; ++n)
            out.push_back(FamilySpec::complete(n));
        break;
    case Family::Star:
        for (int n = 2; n <= max_n; ++n)
            out.push_back(FamilySpec::star(n));
        break;
    case Family::CompleteBipartite:
        // K_{1,1} = K_2 is the complete row n = 2.
        for (int total = 3; total <= max_n; ++total)
            for (int m = 1; 2 * m <= total; ++m)
                out.push_back(FamilySpec::complete_bipartite(m, total - m));
        break;
    case Family::Wheel:
        for (int n = 3; n <= max_n; ++n)
            out.push_back(FamilySpec::wheel(n));
        break;
    case Family::Gear:
        for (int n = 2; n <= max_n; ++n)
            out.push_back(FamilySpec::gear(n));
        break;
    }
    return out;
}

int cmd_table(const TableOptions& opt, std::ostream& out) {
    if (opt.max_n < 1)
        throw Error(ErrorKind::InvalidParameter, "--max-n must be positive");
    std::vector<Family> families;
    if (opt.families == "all") {
        families = {Family::Complete, Family::Star, Family::CompleteBipartite, Family::Wheel, Family::Gear};
    } else {
        std::stringstream list(opt.families);
        for (std::string name; std::getline(list, name, ',');)
            families.push_back(parse_family(name));
    }
    SolverConfig cfg;
    cfg.time_budget = parse_duration(opt.time_budget);
    cfg.workers = opt.workers;
    validate(cfg);

    out << "family,n,lower_bound,constructive_span,solver_rn,agrees\n";
    bool all_agree = true;
    for (Family f : families) {
        for (const FamilySpec& spec : table_instances(f, opt.max_n)) {
            const Graph g = build(spec);
            int lower = std::max(lower_bound_trivial(g).value, lower_bound_ecc_gap(g, g.distances()).value);
            if (f == Family::Gear && spec.n >= 4)
                lower = std::max(lower, lower_bound_gear(spec.n).value);

            std::optional<int> constructive;
            if (!(f == Family::Gear && spec.n < 4))
                constructive = span(label_family(spec));

            const bool run_solver = f == Family::Gear
                                        ? spec.n <= opt.gear_solver_max_n
                                        : static_cast<int>(g.vertex_count()) <= opt.solver_max_vertices;
            std::string solver_cell;
            std::optional<int> solved;
            if (run_solver) {
                const auto r = solve(g, g.distances(), cfg);
                if (r.solved()) {
                    solved = r.rn();
                    solver_cell = std::to_string(*solved);
                } else {
                    solver_cell = "inconclusive";
                }
            }

            bool agrees = true;
            if (constructive)
                agrees = agrees && lower <= *constructive && *constructive == family_radio_number(spec);
            if (solved)
                agrees = agrees && lower <= *solved && (!constructive || *constructive == *solved);
            all_agree = all_agree && agrees;

            const std::string n_cell = f == Family::CompleteBipartite
                                           ? std::to_string(spec.m) + ":" + std::to_string(spec.n)
                                           : std::to_string(spec.n);
            out << family_name(f) << "," << n_cell << "," << lower << ","
                << (constructive ? std::to_string(*constructive) : "") << "," << solver_cell << ","
                << (agrees ? "true" : "false") << "\n";
        }
    }
    return all_agree ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radio labelings of graph families: build, label, verify, bound, solve.", "radiolabel"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "emit a family graph");
    FamilyOptions gen_family;
    std::string gen_format = "json";
    gen_family.add_to(*gen, true);
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "dot"}));

    auto* label = app.add_subcommand("label", "emit the constructive radio labeling of a family graph");
    FamilyOptions label_family_opts;
    std::string label_format = "json";
    bool show_positions = false;
    label_family_opts.add_to(*label, true);
    label->add_option("--format", label_format)->check(CLI::IsMember({"json", "dot"}));
    label->add_flag("--show-positions", show_positions, "record gear position indices");

    auto* verify = app.add_subcommand("verify", "check the radio condition");
    std::string verify_graph;
    std::optional<std::string> verify_labeling;
    bool fail_fast = false;
    verify->add_option("--graph", verify_graph, "graph JSON, '-' for stdin")->required();
    verify->add_option("--labeling", verify_labeling, "labeling JSON (default: labels in the graph document)");
    verify->add_flag("--fail-fast", fail_fast, "stop at the first violation");

    auto* bound = app.add_subcommand("bound", "print a lower bound report");
    FamilyOptions bound_family;
    std::optional<std::string> bound_graph;
    std::string method = "trivial";
    bound_family.add_to(*bound, false);
    bound->add_option("--graph", bound_graph, "graph JSON, '-' for stdin");
    bound->add_option("--method", method)->check(CLI::IsMember({"gear", "ecc", "trivial"}));

    auto* solve_cmd = app.add_subcommand("solve", "exact radio number by exhaustive search");
    FamilyOptions solve_family;
    std::optional<std::string> solve_graph;
    std::optional<std::string> time_budget;
    std::optional<std::uint64_t> node_budget;
    std::optional<int> start_span;
    unsigned workers = 1;
    bool no_symmetry = false;
    solve_family.add_to(*solve_cmd, false);
    solve_cmd->add_option("--graph", solve_graph, "graph JSON, '-' for stdin");
    solve_cmd->add_option("--time-budget", time_budget, "e.g. 60s, 500ms");
    solve_cmd->add_option("--node-budget", node_budget);
    solve_cmd->add_option("--workers", workers);
    solve_cmd->add_option("--start-span", start_span);
    solve_cmd->add_flag("--no-symmetry-breaking", no_symmetry);

    auto* table = app.add_subcommand("table", "CSV of bounds, constructive spans and solver values");
    TableOptions table_opts;
    table->add_option("--families", table_opts.families, "'all' or a comma-separated list");
    table->add_option("--max-n", table_opts.max_n);
    table->add_option("--gear-solver-max-n", table_opts.gear_solver_max_n, "largest gear handed to the solver");
    table->add_option("--solver-max-vertices", table_opts.solver_max_vertices,
                      "largest non-gear instance handed to the solver");
    table->add_option("--time-budget", table_opts.time_budget, "per-instance solver budget");
    table->add_option("--workers", table_opts.workers);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*gen)
            return cmd_gen(gen_family, gen_format, out);
        if (*label)
            return cmd_label(label_family_opts, label_format, show_positions, out, err);
        if (*verify)
            return cmd_verify(verify_graph, verify_labeling, fail_fast, in, out, err);
        if (*bound)
            return cmd_bound(bound_family, bound_graph, method, in, out);
        if (*solve_cmd) {
            SolverConfig cfg;
            if (time_budget)
                cfg.time_budget = parse_duration(*time_budget);
            cfg.node_budget = node_budget;
            cfg.start_span = start_span;
            cfg.workers = workers;
            cfg.symmetry_breaking = !no_symmetry;
            validate(cfg);
            return cmd_solve(solve_family, solve_graph, cfg, in, out);
        }
        if (*table)
            return cmd_table(table_opts, out);
    } catch (const Error& e) {
        err << "radiolabel: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace radiolabel::cli
