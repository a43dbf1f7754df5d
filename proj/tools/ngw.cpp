// Command-line front end: solve, ng, construct, mc, table1, verify.

#include <ngw/ngw.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace {

using ngw::Json;

enum ExitCode { kOk = 0, kUsage = 1, kCapacity = 2, kViolation = 3, kDisagreement = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ngw::Graph read_edge_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read graph file " + path);
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        int a = 0;
        if (!(fields >> a))
            continue;
        int b = 0;
        if (n < 0) {
            n = a;
            continue;
        }
        if (!(fields >> b))
            throw UsageError("edge line needs two vertices: " + line);
        edges.emplace_back(a, b);
    }
    if (n < 0)
        throw UsageError("graph file " + path + " has no vertex count");
    ngw::Graph g(n);
    for (auto [a, b] : edges)
        g.add_edge(a, b);
    return g;
}

// g6:<graph6>, a family shorthand (K5, P7, C6, K3,3, S4, E5, Petersen), an
// edge-list file (vertex count, then one "u v" per line), or bare graph6.
ngw::Graph parse_graph(const std::string& arg)
{
    using ngw::GraphFamily;
    if (arg.rfind("g6:", 0) == 0)
        return ngw::graph6_parse(arg.substr(3));
    if (arg == "Petersen" || arg == "petersen")
        return ngw::petersen_graph();
    static const std::regex bipartite(R"(K(\d+),(\d+))");
    static const std::regex single(R"(([KPCSE])(\d+))");
    std::smatch m;
    if (std::regex_match(arg, m, bipartite))
        return ngw::make_graph(GraphFamily::complete_bipartite(std::stoi(m[1]), std::stoi(m[2])));
    if (std::regex_match(arg, m, single)) {
        const int size = std::stoi(m[2]);
        switch (m[1].str()[0]) {
        case 'K': return ngw::make_graph(GraphFamily::complete(size));
        case 'P': return ngw::make_graph(GraphFamily::path(size));
        case 'C': return ngw::make_graph(GraphFamily::cycle(size));
        case 'S': return ngw::make_graph(GraphFamily::star(size));
        default: return ngw::make_graph(GraphFamily::empty(size));
        }
    }
    if (std::filesystem::is_regular_file(arg))
        return read_edge_list(arg);
    try {
        return ngw::graph6_parse(arg);
    } catch (const ngw::ParseError&) {
        throw UsageError("unrecognized graph '" + arg + "'");
    }
}

ngw::ParamKind parse_param_or_throw(const std::string& name)
{
    if (auto p = ngw::parse_param(name))
        return *p;
    throw UsageError("unknown parameter '" + name + "'");
}

Json vertex_list(ngw::VertexSet s)
{
    Json out = Json::array();
    ngw::for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

Json certificate_json(const ngw::WidthCertificate& cert)
{
    return std::visit(
        [](const auto& c) -> Json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ngw::EliminationOrdering>)
                return Json{{"kind", "elimination_ordering"}, {"order", c.order}};
            else if constexpr (std::is_same_v<T, ngw::VertexLayout>)
                return Json{{"kind", "vertex_layout"}, {"order", c.order}};
            else if constexpr (std::is_same_v<T, ngw::KTreeHost>)
                return Json{{"kind", "ktree_host"}, {"host", ngw::host_json(c)}};
            else if constexpr (std::is_same_v<T, ngw::BranchSets>) {
                Json sets = Json::array();
                for (auto s : c.sets)
                    sets.push_back(vertex_list(s));
                return Json{{"kind", "branch_sets"}, {"sets", sets}};
            } else if constexpr (std::is_same_v<T, ngw::CliqueWitness>)
                return Json{{"kind", "clique"}, {"members", vertex_list(c.members)}};
            else
                return Json{{"kind", "coloring"}, {"colors", c.colors}};
        },
        cert);
}

void emit(const Json& report, const std::string& path)
{
    const std::string text = report.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

struct Common {
    std::string json_path = "-";
    std::uint64_t seed = 0;
    int jobs = 1;
};

int run_solve(const Common& common, const std::string& graph_arg, const std::string& param)
{
    ngw::Stopwatch clock;
    const ngw::Graph g = parse_graph(graph_arg);
    std::vector<ngw::ParamKind> kinds;
    if (param == "all")
        kinds.assign(ngw::kAllParams.begin(), ngw::kAllParams.end());
    else
        kinds.push_back(parse_param_or_throw(param));

    Json report = ngw::report_envelope("solve", common.seed);
    report["graph"] = Json{{"n", g.order()}, {"graph6", ngw::graph6_emit(g)}, {"edges", g.edge_count()}};
    Json values = Json::array();
    for (auto kind : kinds) {
        Json entry{{"param", ngw::param_name(kind)}};
        const auto value = ngw::parameter_value(g, kind);
        entry["value"] = ngw::interval_json(value);
        if (!ngw::is_interval_param(kind) && !g.edgeless())
            entry["certificate"] = certificate_json(ngw::solve_exact(g, kind).certificate);
        std::fprintf(stderr, "%-6s %s\n", std::string(ngw::param_name(kind)).c_str(),
                     ngw::to_string(value).c_str());
        values.push_back(std::move(entry));
    }
    report["values"] = values;
    report["timing"] = Json{{"seconds", clock.seconds()}};
    emit(report, common.json_path);
    return kOk;
}

int run_ng(const Common& common, const ngw::NGQuery& q, const std::string& symmetry,
           const std::string& checkpoint)
{
    ngw::Stopwatch clock;
    ngw::NGOptions options;
    options.jobs = common.jobs;
    options.checkpoint_path = checkpoint;
    if (auto m = ngw::parse_symmetry(symmetry))
        options.symmetry = *m;
    else
        throw UsageError("unknown symmetry mode '" + symmetry + "'");

    const auto result = ngw::ng_exact(q, options);
    const auto checks = ngw::check_bounds(q, result.value);
    Json report = ngw::report_envelope("ng", common.seed);
    report["result"] = ngw::ng_result_json(q, result, checks);
    report["timing"] = Json{{"seconds", clock.seconds()}};
    emit(report, common.json_path);

    std::fprintf(stderr, "%s %s %s r=%d n=%d%s: %s  (%llu states)\n",
                 std::string(ngw::param_name(q.param)).c_str(),
                 std::string(ngw::aggregate_name(q.aggregate)).c_str(),
                 std::string(ngw::direction_name(q.direction)).c_str(), q.r, q.n,
                 q.nondegenerate ? " non-degenerate" : "", ngw::to_string(result.value).c_str(),
                 static_cast<unsigned long long>(result.states_explored));
    for (const auto& c : checks)
        std::fprintf(stderr, "  %-16s %-10s %12.6g  %s\n", std::string(ngw::bound_status_name(c.status)).c_str(),
                     std::string(ngw::bound_kind_name(c.row.kind)).c_str(), c.row.value, c.row.tag.c_str());
    return ngw::any_violated(checks) ? kViolation : kOk;
}

int run_construct(const Common& common, const std::string& kind, int n, int r, bool nondegenerate,
                  const std::string& out_dir)
{
    ngw::Stopwatch clock;
    ngw::ConstructionResult c;
    if (kind == "blowup")
        c = ngw::blowup_decomposition(n, r);
    else if (kind == "four-block")
        c = ngw::four_block_decomposition(n, r, nondegenerate);
    else if (kind == "paths-plus-remainder")
        c = ngw::path_plus_remainder_decomposition(n, r);
    else if (kind == "random")
        c = {ngw::random_decomposition(n, r, common.seed), {}, "random", std::nullopt};
    else
        throw UsageError("unknown construction '" + kind + "'");

    Json report = ngw::report_envelope("construct", common.seed);
    Json body = ngw::construction_json(c);
    bool all_hold = true;
    Json evaluated = Json::array();
    for (const auto& g : c.guarantees) {
        if (n > ngw::solver_capacity(g.param))
            continue;
        std::vector<ngw::ValueInterval> parts;
        for (const auto& part : c.decomposition.parts)
            parts.push_back(ngw::parameter_value(part, g.param));
        const auto total = ngw::aggregate_parts(g.aggregate, parts).lo;
        const bool holds = g.relation == ngw::Relation::at_least ? total >= g.value : total <= g.value;
        all_hold = all_hold && holds;
        Json values = Json::array();
        for (const auto& v : parts)
            values.push_back(v.lo);
        evaluated.push_back(Json{{"param", ngw::param_name(g.param)},
                                 {"aggregate", ngw::aggregate_name(g.aggregate)},
                                 {"part_values", values},
                                 {"total", total},
                                 {"holds", holds}});
        std::fprintf(stderr, "%s %s %s %lld: computed %lld %s\n", std::string(ngw::param_name(g.param)).c_str(),
                     std::string(ngw::aggregate_name(g.aggregate)).c_str(),
                     std::string(ngw::relation_name(g.relation)).c_str(), static_cast<long long>(g.value),
                     static_cast<long long>(total), holds ? "ok" : "VIOLATED");
    }
    body["evaluated"] = evaluated;
    report["construction"] = body;
    report["timing"] = Json{{"seconds", clock.seconds()}};
    emit(report, common.json_path);

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (int i = 0; i < c.decomposition.part_count(); ++i) {
            std::ofstream f(std::filesystem::path(out_dir) / ("part_" + std::to_string(i + 1) + ".g6"));
            f << ngw::graph6_emit(c.decomposition.parts[i]) << '\n';
        }
    }
    return all_hold ? kOk : kViolation;
}

int run_mc(const Common& common, ngw::ParamKind param, int r, int n, int samples)
{
    ngw::Stopwatch clock;
    Json report = ngw::report_envelope("mc", common.seed);
    try {
        const auto s = ngw::monte_carlo(param, r, n, samples, common.seed, common.jobs);
        report["monte_carlo"] = ngw::monte_carlo_json(s);
        report["timing"] = Json{{"seconds", clock.seconds()}};
        emit(report, common.json_path);
        std::fprintf(stderr, "%s r=%d n=%d samples=%d: sum %.3f..%.3f (mean %.3f), product %.3f..%.3f\n",
                     std::string(ngw::param_name(param)).c_str(), r, n, samples, s.sum_lo.min, s.sum_hi.max,
                     s.sum_lo.mean, s.product_lo.min, s.product_hi.max);
        return kOk;
    } catch (const ngw::BoundViolation& e) {
        report["violation"] = Json{{"message", e.what()}, {"witness", e.witness()}};
        report["timing"] = Json{{"seconds", clock.seconds()}};
        emit(report, common.json_path);
        throw;
    }
}

int run_table1(const Common& common, int r_max, const std::string& format, bool json_requested)
{
    if (json_requested) {
        Json report = ngw::report_envelope("table1", common.seed);
        Json rows = Json::array();
        for (const auto& row : ngw::table1(r_max))
            rows.push_back(Json{{"r", row.r},
                                {"r_over_t", ngw::format_table_value(row.blowup_ratio)},
                                {"sqrt_r", ngw::format_table_value(row.sqrt_r)}});
        report["table1"] = rows;
        report["timing"] = Json{{"seconds", 0.0}};
        emit(report, common.json_path);
    }
    std::string text;
    if (format == "csv")
        text = ngw::table1_csv(r_max);
    else if (format == "text")
        text = ngw::table1_text(r_max);
    else
        throw UsageError("unknown table format '" + format + "'");
    // JSON on stdout leaves the table for stderr.
    (json_requested && common.json_path == "-" ? std::cerr : std::cout) << text;
    return kOk;
}

int run_verify(const Common& common, const std::string& level_name)
{
    const auto level = ngw::parse_verify_level(level_name);
    if (!level)
        throw UsageError("unknown verify level '" + level_name + "'");
    ngw::Stopwatch clock;
    const auto result = ngw::verify_suite(*level, common.jobs, [](const ngw::CheckOutcome& c) {
        std::fprintf(stderr, "%s criterion %2d  %-66s %7.2fs  %s\n", c.passed ? "PASS" : "FAIL", c.criterion,
                     c.name.c_str(), c.seconds, c.detail.c_str());
    });
    Json report = ngw::report_envelope("verify", common.seed);
    report["verify"] = ngw::verify_report_json(result);
    Json per_check = Json::array();
    for (const auto& c : result.checks)
        per_check.push_back(c.seconds);
    report["timing"] = Json{{"seconds", clock.seconds()}, {"checks", per_check}};
    emit(report, common.json_path);
    return result.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact width parameters and Nordhaus-Gaddum bounds for decompositions of K_n"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", common.json_path, "JSON report path, - for stdout");
        sub->add_option("--seed", common.seed, "Seed for all randomness");
        sub->add_option("--jobs", common.jobs, "Worker threads, 0 for one per hardware thread");
    };

    std::string graph_arg, param = "all";
    auto* solve = app.add_subcommand("solve", "Parameter values of one graph");
    solve->add_option("--graph", graph_arg, "g6:<graph6>, K5, P7, C6, K3,3, S4, E5, Petersen or a file")
        ->required();
    solve->add_option("--param", param, "Parameter name or all");
    add_common(solve);

    std::string ng_param, agg = "sum", dir = "upper", symmetry = "vertices_and_colors", checkpoint;
    int r = 2, n = 5;
    bool nondegenerate = false;
    auto* ng = app.add_subcommand("ng", "Exact Nordhaus-Gaddum value by exhaustive enumeration");
    ng->add_option("--param", ng_param)->required();
    ng->add_option("--agg", agg, "sum or prod");
    ng->add_option("--dir", dir, "upper or lower");
    ng->add_option("--r", r)->required();
    ng->add_option("--n", n)->required();
    ng->add_flag("--nondegenerate", nondegenerate);
    ng->add_option("--symmetry", symmetry, "none, vertices or vertices_and_colors");
    ng->add_option("--checkpoint", checkpoint, "Resumable checkpoint file");
    add_common(ng);

    std::string construction = "blowup", out_dir;
    auto* construct = app.add_subcommand("construct", "Emit an explicit decomposition");
    construct->add_option("--kind", construction, "blowup, four-block, paths-plus-remainder or random");
    construct->add_option("--n", n)->required();
    construct->add_option("--r", r)->required();
    construct->add_flag("--nondegenerate", nondegenerate);
    construct->add_option("--out-dir", out_dir, "Also write one graph6 file per part here");
    add_common(construct);

    std::string mc_param;
    int samples = 100;
    auto* mc = app.add_subcommand("mc", "Random decompositions checked against every bound");
    mc->add_option("--param", mc_param)->required();
    mc->add_option("--r", r)->required();
    mc->add_option("--n", n)->required();
    mc->add_option("--samples", samples);
    add_common(mc);

    int r_max = 10;
    std::string format = "csv";
    auto* t1 = app.add_subcommand("table1", "Regenerate the r/t versus sqrt(r) table");
    t1->add_option("--rmax", r_max);
    t1->add_option("--format", format, "csv or text");
    add_common(t1);
    common.json_path = "-";

    std::string level = "smoke";
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--level", level, "smoke, desk or extended");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    auto parse_enum = [](const std::string& s, const char* a, const char* b, const char* what) {
        if (s == a)
            return true;
        if (s == b)
            return false;
        throw UsageError(std::string("unknown ") + what + " '" + s + "'");
    };

    try {
        if (solve->parsed())
            return run_solve(common, graph_arg, param);
        if (ng->parsed()) {
            ngw::NGQuery q;
            q.param = parse_param_or_throw(ng_param);
            q.aggregate = parse_enum(agg, "sum", "prod", "aggregate") ? ngw::Aggregate::sum : ngw::Aggregate::product;
            q.direction = parse_enum(dir, "upper", "lower", "direction") ? ngw::Direction::upper : ngw::Direction::lower;
            q.r = r;
            q.n = n;
            q.nondegenerate = nondegenerate;
            return run_ng(common, q, symmetry, checkpoint);
        }
        if (construct->parsed())
            return run_construct(common, construction, n, r, nondegenerate, out_dir);
        if (mc->parsed())
            return run_mc(common, parse_param_or_throw(mc_param), r, n, samples);
        if (t1->parsed())
            return run_table1(common, r_max, format, t1->count("--json") > 0);
        if (verify->parsed())
            return run_verify(common, level);
    } catch (const ngw::CapacityError& e) {
        std::fprintf(stderr, "capacity: %s\n", e.what());
        return kCapacity;
    } catch (const ngw::BoundViolation& e) {
        std::fprintf(stderr, "bound violation: %s\nwitness: %s\n", e.what(), e.witness().c_str());
        return kViolation;
    } catch (const ngw::SolverDisagreement& e) {
        std::fprintf(stderr, "solver disagreement: %s\n", e.what());
        return kDisagreement;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    }
    return kUsage;
}
