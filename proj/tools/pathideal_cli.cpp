// Command-line front end: one subcommand per library operation plus the
// acceptance sweep.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "pathideal/io.hpp"
#include "pathideal/pathideal.hpp"
#include "pathideal/sweep.hpp"

namespace {

using namespace pathideal;
using io::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options
{
    std::string forest;
    std::string clutter;
    std::string complex;
    std::string field = "gf2";
    std::string format = "json";
    int ell = 0;
    int n = 0;
    std::optional<int> max_n;
    int max_ell = 8;
    std::uint64_t seed = 0;
    bool timing = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

/// --max-n, else PATHIDEAL_CAP_N, else the library default.
int vertex_cap(const Options& o, int fallback)
{
    if (o.max_n)
        return *o.max_n;
    if (const char* env = std::getenv("PATHIDEAL_CAP_N")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0)
                return cap;
        } catch (const std::exception&) {
        }
        throw Error(ErrorCode::InvalidArgument, std::string("PATHIDEAL_CAP_N must be a positive integer, got '") +
                                                    env + "'");
    }
    return fallback;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    throw CLI::ValidationError("--format", "unsupported format '" + o.format + "' for this subcommand");
}

int cmd_paths(const Options& o)
{
    require_format(o, {"json", "dot"});
    const Forest forest = io::read_forest(o.forest);
    const Clutter paths = path_clutter(forest, o.ell);
    if (o.format == "dot") {
        std::cout << io::to_dot(forest);
        return 0;
    }
    json out = io::to_json(paths);
    out["ell"] = o.ell;
    emit(out);
    return 0;
}

int cmd_cover(const Options& o)
{
    require_format(o, {"json"});
    const Clutter c = io::read_clutter(o.clutter);
    const CoverReport report = cover_report(c);
    json out = io::to_json(report, false);
    if (c.edge_count() <= kDefaultEdgeBudget)
        out["unmixed"] = is_unmixed(c);
    else
        out["unmixed"] = nullptr;
    emit(out);
    return 0;
}

int cmd_koenig_certify(const Options& o)
{
    require_format(o, {"json"});
    const Forest forest = io::read_forest(o.forest);
    const Clutter c = io::read_clutter(o.clutter);
    const MatchingResult matching = max_independent_edges(c);
    const VertexSet cover = constructive_cover(forest, c, matching.witness);
    emit({{"beta1", matching.beta1},
          {"alpha0", cover.size()},
          {"matching", io::set_list_json(matching.witness)},
          {"cover", io::vertex_list(cover)},
          {"transversal", is_transversal(c, cover)}});
    return 0;
}

int cmd_classify_cm(const Options& o)
{
    require_format(o, {"json"});
    emit(io::to_json(classify_cm_path_ideal(io::read_forest(o.forest), o.ell)));
    return 0;
}

int cmd_simplicial_tree(const Options& o)
{
    require_format(o, {"json", "dot"});
    const SimplicialComplex delta = io::read_complex(o.complex);
    if (o.format == "dot") {
        std::cout << io::to_dot(one_skeleton(delta));
        return 0;
    }
    json out{{"is_simplicial_tree", is_simplicial_tree(delta)}, {"leaf", nullptr}, {"special_odd_cycle", nullptr}};
    if (const auto leaf = find_leaf(delta)) {
        out["leaf"] = {{"facet", io::vertex_list(leaf->facet)}, {"joint", nullptr}};
        if (leaf->joint)
            out["leaf"]["joint"] = io::vertex_list(*leaf->joint);
    }
    if (const auto cycle = find_special_odd_cycle(delta))
        out["special_odd_cycle"] = io::to_json(*cycle);
    emit(out);
    return 0;
}

int cmd_good_tree(const Options& o)
{
    require_format(o, {"json", "text", "dot"});
    const SimplicialComplex delta = io::read_complex(o.complex);
    const GoodTreeTrace trace = good_spanning_tree_traced(delta);
    if (o.format == "text") {
        std::cout << io::to_edge_list(trace.tree);
        return 0;
    }
    if (o.format == "dot") {
        std::cout << io::to_dot(trace.tree, "good_tree");
        return 0;
    }
    json swaps = json::array();
    for (const SwapStep& s : trace.swaps)
        swaps.push_back({{"added", {s.a, s.b}},
                         {"removed", {s.removed.first, s.removed.second}},
                         {"edges_before", s.edges_before},
                         {"edges_after", s.edges_after}});
    emit({{"tree", io::to_json(trace.tree)}, {"swaps", swaps}});
    return 0;
}

int cmd_depth(const Options& o)
{
    require_format(o, {"json"});
    OracleOptions options;
    options.field = FieldChoice::parse(o.field);
    options.vertex_cap = vertex_cap(o, kDefaultOracleCap);
    Clutter c;
    if (!o.clutter.empty())
        c = io::read_clutter(o.clutter);
    else if (!o.forest.empty() && o.ell > 0)
        c = path_clutter(io::read_forest(o.forest), o.ell);
    else
        throw CLI::ValidationError("depth", "give --clutter, or --forest with --ell");
    json out = io::to_json(depth(c, options));
    out["field"] = options.field.to_string();
    emit(out);
    return 0;
}

int cmd_spine_depth(const Options& o)
{
    require_format(o, {"json"});
    emit(io::to_json(spine_report(o.n, o.ell)));
    return 0;
}

int cmd_spine_verify(const Options& o)
{
    require_format(o, {"json", "table"});
    const int max_n = o.max_n.value_or(13);
    const int oracle_cap = vertex_cap(Options{}, kDefaultOracleCap);
    OracleOptions options;
    options.field = FieldChoice::parse(o.field);
    options.vertex_cap = oracle_cap;
    json rows = json::array();
    bool all_ok = true;
    for (int n = 1; n <= max_n; ++n)
        for (int ell = 1; ell <= std::min(o.max_ell, n); ++ell) {
            const bool forms = verify_explicit_forms(n, ell);
            json oracle = nullptr;
            if (n <= oracle_cap)
                oracle = depth(path_clutter(make_spine(n), ell), options).depth == spine_depth(n, ell);
            const bool ok = forms && (oracle.is_null() || oracle.get<bool>());
            all_ok = all_ok && ok;
            rows.push_back({{"n", n}, {"ell", ell}, {"depth", spine_depth(n, ell)}, {"explicit_forms", forms},
                            {"oracle_match", oracle}, {"pass", ok}});
        }
    if (o.format == "json") {
        emit({{"field", options.field.to_string()}, {"rows", rows}, {"pass", all_ok}});
    } else {
        std::cout << std::setw(4) << "n" << std::setw(5) << "ell" << std::setw(7) << "depth" << std::setw(8)
                  << "forms" << std::setw(8) << "oracle" << "  result\n";
        for (const auto& r : rows) {
            const std::string oracle = r["oracle_match"].is_null() ? "skip" : (r["oracle_match"].get<bool>() ? "ok" : "BAD");
            std::cout << std::setw(4) << r["n"].get<int>() << std::setw(5) << r["ell"].get<int>() << std::setw(7)
                      << r["depth"].get<int>() << std::setw(8) << (r["explicit_forms"].get<bool>() ? "ok" : "BAD")
                      << std::setw(8) << oracle << "  " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
        }
    }
    return all_ok ? 0 : kExitDomain;
}

int cmd_sweep(const Options& o)
{
    require_format(o, {"json", "table"});
    sweep::SweepConfig cfg;
    cfg.seed = o.seed;
    cfg.field = FieldChoice::parse(o.field);
    cfg.oracle_cap = vertex_cap(Options{}, kDefaultOracleCap);
    if (o.max_n)
        cfg.spine_max_n = *o.max_n;
    const auto results = sweep::run_all(cfg);
    bool all_ok = true;
    for (const auto& r : results)
        all_ok = all_ok && r.pass;
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& r : results) {
            json row{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}};
            if (o.timing) {
                row["seconds"] = r.seconds;
                row["slowest_case_seconds"] = r.slowest_case;
            }
            rows.push_back(row);
        }
        emit({{"seed", o.seed}, {"field", cfg.field.to_string()}, {"criteria", rows}, {"pass", all_ok}});
    } else {
        for (const auto& r : results) {
            std::ostringstream line;
            line << std::setw(2) << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << std::left
                 << std::setw(52) << r.name << std::right << std::setw(7) << r.cases << " cases  " << std::fixed
                 << std::setprecision(3) << r.seconds << "s (slowest " << r.slowest_case << "s)";
            std::cout << line.str() << "\n      " << r.detail << "\n";
        }
        std::cout << (all_ok ? "all criteria pass" : "some criteria FAIL") << "\n";
    }
    return all_ok ? 0 : kExitDomain;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Path ideals of trees: covers, Cohen-Macaulayness, depth, simplicial trees"};
    app.require_subcommand(1);
    Options o;

    auto add_field = [&](CLI::App* sub) { sub->add_option("--field", o.field, "gf2, gf<p> or q")->capture_default_str(); };
    auto add_format = [&](CLI::App* sub, const std::string& help, const char* fallback = "json") {
        sub->add_option("--format", o.format, help)->default_str(fallback);
    };

    auto* paths = app.add_subcommand("paths", "all paths of length ell as a clutter");
    paths->add_option("--forest", o.forest, "forest file (edge list or JSON)")->required();
    paths->add_option("--ell", o.ell, "path length in edges")->required()->check(CLI::PositiveNumber);
    add_format(paths, "json | dot");

    auto* cover = app.add_subcommand("cover", "exact alpha0, beta1, Koenig and unmixed checks");
    cover->add_option("--clutter", o.clutter, "clutter JSON")->required();
    add_format(cover, "json");

    auto* certify = app.add_subcommand("koenig-certify", "cover built from a maximum independent set");
    certify->add_option("--forest", o.forest, "forest file")->required();
    certify->add_option("--clutter", o.clutter, "subtree clutter JSON")->required();
    add_format(certify, "json");

    auto* classify = app.add_subcommand("classify-cm", "Cohen-Macaulay test for the path ideal of a tree");
    classify->add_option("--tree", o.forest, "tree file")->required();
    classify->add_option("--ell", o.ell, "path length")->required()->check(CLI::PositiveNumber);
    add_format(classify, "json");

    auto* stree = app.add_subcommand("simplicial-tree", "leaf, simplicial-tree and special odd cycle checks");
    stree->add_option("--complex", o.complex, "complex JSON")->required();
    add_format(stree, "json | dot (one-skeleton)");

    auto* good = app.add_subcommand("good-tree", "good spanning tree of a simplicial tree");
    good->add_option("--complex", o.complex, "complex JSON")->required();
    add_format(good, "json | text (edge list) | dot");

    auto* dep = app.add_subcommand("depth", "depth, pd and CM verdict by Hochster's formula");
    dep->add_option("--clutter", o.clutter, "clutter JSON");
    dep->add_option("--forest", o.forest, "forest file, used with --ell");
    dep->add_option("--ell", o.ell, "path length")->check(CLI::PositiveNumber);
    dep->add_option("--max-n", o.max_n, "vertex cap")->check(CLI::PositiveNumber);
    add_field(dep);
    add_format(dep, "json");

    auto* sdepth = app.add_subcommand("spine-depth", "closed-form depth report for a spine");
    sdepth->add_option("--n", o.n, "number of vertices")->required()->check(CLI::PositiveNumber);
    sdepth->add_option("--ell", o.ell, "path length")->required()->check(CLI::PositiveNumber);
    add_format(sdepth, "json");

    auto* sverify = app.add_subcommand("spine-verify", "closed forms and oracle agreement over a range of spines");
    sverify->add_option("--max-n", o.max_n, "largest n (default 13)")->check(CLI::PositiveNumber);
    sverify->add_option("--max-ell", o.max_ell, "largest ell")->capture_default_str()->check(CLI::PositiveNumber);
    add_field(sverify);
    add_format(sverify, "table | json", "table");

    auto* sw = app.add_subcommand("sweep", "run every acceptance check");
    sw->add_option("--seed", o.seed, "seed for random cases")->capture_default_str();
    sw->add_option("--max-n", o.max_n, "largest spine checked against the oracle (default 13)")
        ->check(CLI::PositiveNumber);
    sw->add_flag("--timing", o.timing, "include timings in JSON output");
    add_field(sw);
    add_format(sw, "table | json", "table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    if ((sverify->parsed() && sverify->count("--format") == 0) || (sw->parsed() && sw->count("--format") == 0))
        o.format = "table";

    try {
        if (paths->parsed())
            return cmd_paths(o);
        if (cover->parsed())
            return cmd_cover(o);
        if (certify->parsed())
            return cmd_koenig_certify(o);
        if (classify->parsed())
            return cmd_classify_cm(o);
        if (stree->parsed())
            return cmd_simplicial_tree(o);
        if (good->parsed())
            return cmd_good_tree(o);
        if (dep->parsed())
            return cmd_depth(o);
        if (sdepth->parsed())
            return cmd_spine_depth(o);
        if (sverify->parsed())
            return cmd_spine_verify(o);
        if (sw->parsed())
            return cmd_sweep(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const NotSimplicialTreeError& e) {
        json err = io::error_json(e);
        err["special_cycle"] = e.cycle() ? io::to_json(*e.cycle()) : json(nullptr);
        std::cerr << err.dump() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << io::error_json(e).dump() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
