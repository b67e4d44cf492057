// Command-line driver: construct, count, fit, lp-verify, bounds.
//
// Exit codes: 0 success, 1 usage or invalid input, 2 verification failure,
// 3 budget refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "udlab/constructions.hpp"
#include "udlab/counting.hpp"
#include "udlab/exponent_lab.hpp"
#include "udlab/lp_exponent.hpp"
#include "udlab/serialize.hpp"
#include "udlab/udgraph.hpp"

using namespace udlab;

namespace {

constexpr int kUsage = 1;
constexpr int kVerification = 2;
constexpr int kBudget = 3;

struct ExitError {
    int code;
    std::string message;
};

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw ExitError{kUsage, "cannot write " + path};
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ExitError{kUsage, "cannot read " + path};
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ExitError{kUsage, path + ": " + e.what()};
    }
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ExitError{kUsage, "cannot read " + path};
    return in;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& v)
{
    std::vector<Rational> out;
    for (const auto& s : v)
        out.push_back(parse_rational(s));
    return out;
}

bool is_sphere_kind(const std::string& kind)
{
    for (auto k : {ConstructionKind::Path, ConstructionKind::EnhancedPath, ConstructionKind::Cycle,
                   ConstructionKind::QuadraticC4, ConstructionKind::Rich})
        if (to_string(k) == kind)
            return true;
    return false;
}

SphereConfig make_sphere(const std::string& kind, int k, long n)
{
    switch (parse_construction_kind(kind)) {
    case ConstructionKind::Path:
        return path_construction(k, n);
    case ConstructionKind::EnhancedPath:
        return enhanced_path_construction(k, n);
    case ConstructionKind::Cycle:
        return cycle_construction(k, n);
    case ConstructionKind::QuadraticC4:
        return quadratic_c4_config(n);
    case ConstructionKind::Rich:
        return rich_q_set(n);
    }
    throw Error("unknown construction");
}

// Walks on `len` vertices: an upper bound on the search tree's widest level.
BigInt walk_estimate(const UnitDistanceGraph& g, int len)
{
    std::vector<BigInt> w(g.vertex_count(), 1), next(g.vertex_count());
    for (int step = 1; step < len; ++step) {
        for (std::size_t v = 0; v < w.size(); ++v) {
            next[v] = 0;
            for (auto u : g.neighbor_list(v))
                next[v] += w[u];
        }
        w.swap(next);
    }
    BigInt total = 0;
    for (const auto& x : w)
        total += x;
    return total;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    int k = 0;
    long n = 0;
    int N = 0;
    std::vector<std::string> heights;
    std::string radius = "1";
    std::string out;
    std::string edges_out;
};

int cmd_construct(const ConstructArgs& a)
{
    Output out(a.out);
    if (a.kind == "grid") {
        if (a.N < 1)
            throw ExitError{kUsage, "grid needs --N >= 1"};
        out.os() << to_json(grid_incidence_scene(a.N)).dump(2) << '\n';
        return 0;
    }
    if (a.kind == "r3-bipartite") {
        std::vector<Rational> heights = parse_rationals(a.heights);
        if (heights.empty())
            for (int i = 0; i < a.k / 2; ++i)
                heights.push_back(i);
        auto cfg = bipartite_r3_construction(a.k, a.n, heights, parse_rational(a.radius));
        out.os() << to_json(cfg).dump(2) << '\n';
        return 0;
    }
    if (!is_sphere_kind(a.kind))
        throw ExitError{kUsage, "unknown --kind '" + a.kind + "'"};
    SphereConfig cfg = make_sphere(a.kind, a.k, a.n);
    out.os() << to_json(cfg).dump(2) << '\n';
    if (!a.edges_out.empty()) {
        auto g = build_sphere_graph(cfg);
        std::ofstream e(a.edges_out), s(a.edges_out + ".json");
        if (!e || !s)
            throw ExitError{kUsage, "cannot write " + a.edges_out};
        write_edge_list(e, g);
        s << graph_sidecar(g).dump(2) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct CountArgs {
    std::string config;
    std::string edges;
    std::string sidecar;
    std::string kind;
    int n = 0;
    int k = 0;
    std::string mode = "all";
    std::string engine = "optimized";
    unsigned threads = 0;
    double budget = 1e8;
    std::string out;
};

Json count_once(const UnitDistanceGraph& g, const SphereConfig* cfg, const CountArgs& a, Engine engine)
{
    CountOptions opts;
    opts.engine = engine;
    opts.threads = a.threads;
    opts.with_antipodal_free = g.has_antipodal_data() && (a.mode == "all" || a.mode == "antipodal-free");
    opts.with_cycles = a.k >= 3 && (a.mode == "all" || a.mode == "cycles");
    auto t0 = std::chrono::steady_clock::now();
    Json j;
    if (a.mode == "pattern") {
        if (!cfg)
            throw ExitError{kUsage, "pattern counts need a sphere configuration"};
        j["k"] = a.k;
        j["engine"] = to_string(engine);
        j["pattern_paths"] = to_string(count_pattern_paths(*cfg, g, a.k));
    } else {
        if (a.mode != "all" && a.mode != "paths" && a.mode != "antipodal-free" && a.mode != "cycles")
            throw ExitError{kUsage, "unknown --mode '" + a.mode + "'"};
        if (a.mode == "antipodal-free" && !g.has_antipodal_data())
            throw ExitError{kUsage, "antipodal-free counts need antipodal data (sphere input or sidecar)"};
        if (a.mode == "cycles" && a.k < 3)
            throw ExitError{kUsage, "cycles need --k >= 3"};
        j = to_json(count_paths(g, a.k, opts));
    }
    if (cfg && cfg->pattern && static_cast<int>(cfg->pattern->slots.size()) == a.k)
        j["closed_form_pattern"] =
            to_string(closed_form_pattern_count(*cfg->pattern, cfg->q_sizes(), cfg->rich_incidences));
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return j;
}

int cmd_count(const CountArgs& a)
{
    if (a.k < 1)
        throw ExitError{kUsage, "--k must be at least 1"};
    std::optional<SphereConfig> cfg;
    UnitDistanceGraph g;
    if (!a.config.empty()) {
        cfg = sphere_config_from_json(read_json(a.config));
        g = build_sphere_graph(*cfg);
    } else if (!a.edges.empty()) {
        auto in = open_in(a.edges);
        std::optional<Json> side;
        if (!a.sidecar.empty())
            side = read_json(a.sidecar);
        g = graph_from_files(in, side ? &*side : nullptr);
    } else if (!a.kind.empty()) {
        if (!is_sphere_kind(a.kind))
            throw ExitError{kUsage, "count generates sphere constructions only; got --kind '" + a.kind + "'"};
        cfg = make_sphere(a.kind, a.k, a.n);
        g = build_sphere_graph(*cfg);
    } else {
        throw ExitError{kUsage, "count needs --config, --edges or --kind"};
    }

    // Budget: the closed form when a matching pattern is known, else walks.
    BigInt estimate;
    if (cfg && cfg->pattern && static_cast<int>(cfg->pattern->slots.size()) == a.k)
        estimate = closed_form_pattern_count(*cfg->pattern, cfg->q_sizes(), cfg->rich_incidences);
    else
        estimate = walk_estimate(g, std::max(1, a.k - 2));
    if (a.budget > 0 && estimate > BigInt(static_cast<unsigned long long>(a.budget)))
        throw ExitError{kBudget, "refusing: estimated " + to_string(estimate) + " structures exceeds the budget of " +
                                     std::to_string(static_cast<unsigned long long>(a.budget))};

    Output out(a.out);
    const SphereConfig* c = cfg ? &*cfg : nullptr;
    if (a.engine == "both") {
        Json naive = count_once(g, c, a, Engine::Naive);
        Json fast = count_once(g, c, a, Engine::Optimized);
        Json both{{"naive", naive}, {"optimized", fast}};
        auto strip = [](Json j) {
            j.erase("engine");
            j.erase("wall_time_seconds");
            return j;
        };
        const bool agree = strip(naive) == strip(fast);
        both["agree"] = agree;
        out.os() << both.dump(2) << '\n';
        if (!agree) {
            std::cerr << "engines disagree\n";
            return kVerification;
        }
        return 0;
    }
    Json r = count_once(g, c, a, parse_engine(a.engine));
    out.os() << r.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct FitArgs {
    std::string kind;
    int k = 0;
    std::string mode = "paths";
    std::vector<long> grid;
    std::string engine = "optimized";
    unsigned threads = 0;
    double budget = 1e8;
    std::vector<std::string> heights;
    std::string radius = "1";
    std::string csv;
    std::string out;
};

// The table row a series is compared against.
const BoundRow* row_for(const BoundTable& t, const ScalingSpec& s)
{
    switch (s.mode) {
    case CountMode::Paths:
    case CountMode::Pattern:
    case CountMode::ClosedForm:
        return s.construction == "rich" ? t.find("sphere-path", 2) : t.find("sphere-path", s.k);
    case CountMode::AntipodalFree:
        return t.find("sphere-antipodal-free-path", s.k);
    case CountMode::Cycles:
        return t.find("sphere-cycle", s.k);
    default:
        return nullptr;
    }
}

int cmd_fit(const FitArgs& a)
{
    ScalingSpec s;
    s.construction = a.kind == "r3-bipartite" ? "bipartite-r3" : a.kind;
    s.k = a.k;
    s.mode = parse_count_mode(a.mode);
    s.n_grid = a.grid;
    s.engine = parse_engine(a.engine);
    s.threads = a.threads;
    s.budget = a.budget;
    s.heights = parse_rationals(a.heights);
    s.radius = parse_rational(a.radius);
    if (s.n_grid.size() < 3)
        throw ExitError{kUsage, "a fit needs at least 3 grid points"};
    try {
        check_budget(s);
    } catch (const BudgetExceeded& e) {
        throw ExitError{kBudget, std::string("refusing: ") + e.what()};
    }
    ScalingRun run = run_scaling(s);
    ExponentFit fit = fit_exponent(run);
    if (!a.csv.empty()) {
        Output csv(a.csv);
        write_csv(csv.os(), run);
    }
    Json j;
    j["construction"] = s.construction;
    j["k"] = s.k;
    j["mode"] = to_string(s.mode);
    j["fit"] = to_json(fit);
    Json series = Json::array();
    for (const auto& p : run.series)
        series.push_back(Json{{"n", p.n}, {"x", p.x}, {"count", to_string(p.count)}});
    j["series"] = series;
    auto table = bound_table(std::max(15, s.k));
    const BoundRow* row = row_for(table, s);
    j["bound_row"] = row ? to_json(*row) : Json(nullptr);
    Json predicted = nullptr;
    if (s.construction == "grid")
        predicted = to_string(Rational(4, 3));
    else if (s.construction == "bipartite-r3")
        predicted = to_string(Rational(s.k, 2));
    else if (row && row->lower && *row->lower == row->upper)
        predicted = to_string(row->upper);
    j["predicted_exponent"] = predicted;
    Output out(a.out);
    out.os() << j.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct LpArgs {
    std::string graph;
    std::string named;
    unsigned threads = 0;
    std::string out;
};

RegularGraphSpec named_graph(const std::string& name)
{
    if (name == "K4")
        return RegularGraphSpec::complete(4);
    if (name == "K33")
        return RegularGraphSpec::complete_bipartite(3, 3);
    if (name == "prism")
        return RegularGraphSpec::prism();
    if (name == "cube")
        return cube_graph();
    if (name == "wagner")
        return wagner_graph();
    if (name == "petersen")
        return petersen_graph();
    throw ExitError{kUsage, "unknown graph '" + name + "' (K4, K33, prism, cube, wagner, petersen)"};
}

int cmd_lp_verify(const LpArgs& a)
{
    RegularGraphSpec G;
    if (!a.graph.empty()) {
        auto in = open_in(a.graph);
        G = regular_graph_from_edge_list(in);
    } else if (!a.named.empty()) {
        G = named_graph(a.named);
    } else {
        throw ExitError{kUsage, "lp-verify needs --graph or --named"};
    }
    if (!G.is_simple() || !G.is_regular(3))
        throw ExitError{kUsage, "the pattern graph must be simple and 3-regular"};
    XiSweepReport r = verify_xi_bound(G, a.threads);
    Output out(a.out);
    out.os() << to_json(r).dump(2) << '\n';
    if (!r.ok()) {
        std::cerr << "verification failed\n";
        return kVerification;
    }
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_bounds(int max_k, bool json)
{
    auto t = bound_table(max_k);
    if (json) {
        std::cout << to_json(t).dump(2) << '\n';
        return 0;
    }
    std::cout << "quantity                      k  lower   upper   polylog\n";
    for (const auto& r : t.rows) {
        std::ostringstream line;
        line << r.quantity;
        std::string s = line.str();
        s.resize(30, ' ');
        std::string k = std::to_string(r.k);
        k.resize(3, ' ');
        std::string lo = r.lower ? to_string(*r.lower) : "-";
        lo.resize(8, ' ');
        std::string up = to_string(r.upper);
        up.resize(8, ' ');
        std::cout << s << k << lo << up << (r.polylog ? "yes" : "no") << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Unit distance subgraph counting on the sphere of radius 1/sqrt(2)"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Write a construction as JSON");
    construct->add_option("--kind", ca.kind,
                          "sphere-path, sphere-path-enhanced, sphere-cycle, quadratic-c4, rich, grid, r3-bipartite")
        ->required();
    construct->add_option("--k", ca.k, "Path/cycle length in vertices");
    construct->add_option("--n", ca.n, "Point budget");
    construct->add_option("--N", ca.N, "Grid parameter");
    construct->add_option("--heights", ca.heights, "r3-bipartite line heights (rationals)");
    construct->add_option("--radius", ca.radius, "r3-bipartite circle radius");
    construct->add_option("--out,-o", ca.out, "Output file (default stdout)");
    construct->add_option("--edges", ca.edges_out, "Also write the graph as an edge list plus <file>.json");

    CountArgs cn;
    auto* count = app.add_subcommand("count", "Count paths, cycles or pattern paths");
    count->add_option("--config", cn.config, "Sphere configuration JSON");
    count->add_option("--edges", cn.edges, "Edge list file");
    count->add_option("--sidecar", cn.sidecar, "Edge list sidecar JSON (labels, antipodes)");
    count->add_option("--kind", cn.kind, "Generate a sphere construction instead of reading one");
    count->add_option("--n", cn.n, "Point budget for --kind");
    count->add_option("--k", cn.k, "Length in vertices")->required();
    count->add_option("--mode", cn.mode, "all, paths, antipodal-free, cycles, pattern");
    count->add_option("--engine", cn.engine, "naive, optimized or both");
    count->add_option("--threads", cn.threads, "Worker threads (default: UDLAB_THREADS or all cores)");
    count->add_option("--budget", cn.budget, "Refuse above this many estimated structures (0: no limit)");
    count->add_option("--out,-o", cn.out, "Output file (default stdout)");

    FitArgs fa;
    auto* fit = app.add_subcommand("fit", "Scaling run and log-log exponent fit");
    fit->add_option("--kind", fa.kind, "Construction, grid or r3-bipartite")->required();
    fit->add_option("--k", fa.k, "Length in vertices");
    fit->add_option("--mode", fa.mode, "pattern, closed-form, paths, antipodal-free, cycles, incidences, prescribed");
    fit->add_option("--grid", fa.grid, "Strictly increasing sizes")->delimiter(',')->required();
    fit->add_option("--engine", fa.engine, "naive or optimized");
    fit->add_option("--threads", fa.threads, "Worker threads");
    fit->add_option("--budget", fa.budget, "Predicted-count budget per grid point");
    fit->add_option("--heights", fa.heights, "r3-bipartite line heights");
    fit->add_option("--radius", fa.radius, "r3-bipartite circle radius");
    fit->add_option("--csv", fa.csv, "Series CSV output");
    fit->add_option("--out,-o", fa.out, "Fit JSON output (default stdout)");

    LpArgs la;
    auto* lp = app.add_subcommand("lp-verify", "Exhaustive (H, lambda) sweep for a 3-regular graph");
    lp->add_option("--graph", la.graph, "Edge list of G");
    lp->add_option("--named", la.named, "K4, K33, prism, cube, wagner, petersen");
    lp->add_option("--threads", la.threads, "Worker threads");
    lp->add_option("--out,-o", la.out, "Certificate output (default stdout)");

    int max_k = 15;
    bool bounds_json = false;
    auto* bounds = app.add_subcommand("bounds", "Print the exponent bound table");
    bounds->add_option("--max-k", max_k, "Largest k for the per-k rows");
    bounds->add_flag("--json", bounds_json, "JSON instead of a text table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*construct)
            return cmd_construct(ca);
        if (*count)
            return cmd_count(cn);
        if (*fit)
            return cmd_fit(fa);
        if (*lp)
            return cmd_lp_verify(la);
        if (*bounds)
            return cmd_bounds(max_k, bounds_json);
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
