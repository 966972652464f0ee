#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pathideal/clutter.hpp"
#include "pathideal/depth_oracle.hpp"
#include "pathideal/error.hpp"
#include "pathideal/forest.hpp"
#include "pathideal/generators.hpp"
#include "pathideal/koenig.hpp"
#include "pathideal/simplicial.hpp"
#include "pathideal/spine.hpp"
#include "pathideal/suspension.hpp"

namespace pathideal::sweep {

struct SweepConfig
{
    std::uint64_t seed = 0;
    FieldChoice field = FieldChoice::gf2();
    /// Largest spine checked against the oracle.
    int spine_max_n = 13;
    /// Largest tree enumerated for the CM classification.
    int tree_max_n = 9;
    int random_clutters = 1000;
    int random_simplicial_trees = 200;
    /// Vertex cap for the Hochster oracle.
    int oracle_cap = kDefaultOracleCap;
};

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool pass = false;
    int cases = 0;
    std::string detail;
    double seconds = 0.0;
    /// Slowest single case, for tuning caps.
    double slowest_case = 0.0;
};

namespace detail {

class Tally
{
public:
    explicit Tally(CriterionResult& r) : r_(r) {}

    /// Runs one case; a false return or any exception marks a failure.
    void run(const std::string& label, const std::function<bool()>& body)
    {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = e.what();
        }
        const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r_.slowest_case = std::max(r_.slowest_case, took);
        ++r_.cases;
        if (!ok) {
            ++failures_;
            if (first_failure_.empty())
                first_failure_ = label + (why.empty() ? "" : " (" + why + ")");
        }
    }

    void finish(const std::string& summary)
    {
        r_.pass = failures_ == 0 && r_.cases > 0;
        r_.detail = r_.pass ? summary : std::to_string(failures_) + " failing case(s), first: " + first_failure_;
    }

private:
    CriterionResult& r_;
    int failures_ = 0;
    std::string first_failure_;
};

template <class Fn>
CriterionResult timed(int id, std::string name, Fn&& fn)
{
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    fn(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string pair_label(int n, int ell) { return "n=" + std::to_string(n) + " ell=" + std::to_string(ell); }

/// Same cycle up to rotation and reversal.
inline bool same_cycle(const SpecialCycle& x, const SpecialCycle& y)
{
    const std::size_t s = x.facets.size();
    if (s != y.facets.size() || x.vertices.size() != s || y.vertices.size() != s)
        return false;
    for (std::size_t shift = 0; shift < s; ++shift) {
        bool forward = true;
        bool backward = true;
        for (std::size_t i = 0; i < s; ++i) {
            forward = forward && x.vertices[i] == y.vertices[(i + shift) % s] &&
                      x.facets[i] == y.facets[(i + shift) % s];
            // Reversed: vertex x_i pairs with y_{shift - i}, facet F_{i+1}
            // (between x_i and x_{i+1}) with the facet before y_{shift - i}.
            const std::size_t j = (shift + s - i) % s;
            backward = backward && x.vertices[i] == y.vertices[j] && x.facets[i] == y.facets[(j + s - 1) % s];
        }
        if (forward || backward)
            return true;
    }
    return false;
}

} // namespace detail

inline CriterionResult spine_depth_exactness(const SweepConfig& cfg)
{
    return detail::timed(1, "spine depth equals oracle depth", [&](CriterionResult& r) {
        detail::Tally tally(r);
        OracleOptions options;
        options.field = cfg.field;
        options.vertex_cap = std::max(cfg.oracle_cap, cfg.spine_max_n);
        for (int n = 1; n <= cfg.spine_max_n; ++n)
            for (int ell = 1; ell <= n; ++ell)
                tally.run(detail::pair_label(n, ell), [&] {
                    return depth(path_clutter(make_spine(n), ell), options).depth == spine_depth(n, ell);
                });
        tally.finish("all (n, ell) with n <= " + std::to_string(cfg.spine_max_n) + " match over " +
                     cfg.field.to_string());
    });
}

inline CriterionResult worked_example(const SweepConfig&)
{
    return detail::timed(2, "sequences and depth for n=18 ell=6", [&](CriterionResult& r) {
        detail::Tally tally(r);
        tally.run("sequence_a(18,6)", [] {
            const std::vector<std::vector<int>> expected{{1, 1, 12, 17}, {1, 2, 11, 16}, {1, 3, 10, 15},
                                                         {2, 1, 12, 16}, {2, 2, 11, 15}, {3, 1, 12, 15}};
            const auto got = sequence_a(18, 6);
            if (got.size() != expected.size())
                return false;
            for (std::size_t i = 0; i < got.size(); ++i)
                if (got[i].j != expected[i][0] || got[i].k != expected[i][1] ||
                    got[i].monomial != VertexSet::interval(expected[i][2], expected[i][3]))
                    return false;
            return true;
        });
        tally.run("sequence_b(18,6)", [] {
            const auto got = sequence_b(18, 6);
            return got.size() == 3 && got[0].monomial == VertexSet{13, 14, 15} && got[1].monomial == VertexSet{14, 15} &&
                   got[2].monomial == VertexSet{15};
        });
        tally.run("spine_depth(18,6)", [] { return spine_depth(18, 6) == 14; });
        tally.finish("a and b sequences and depth 14 reproduced");
    });
}

inline CriterionResult explicit_forms(const SweepConfig&)
{
    return detail::timed(3, "closed forms of the colon and sum chains", [&](CriterionResult& r) {
        detail::Tally tally(r);
        int compared = 0;
        for (int n = 5; n <= 20; ++n)
            for (int ell = 2; ell <= 8; ++ell)
                tally.run(detail::pair_label(n, ell), [&] {
                    const ExplicitFormCheck check = check_explicit_forms(n, ell);
                    compared += check.compared;
                    return check.ok();
                });
        tally.finish(std::to_string(compared) + " ideals equal their closed forms for 5<=n<=20, 2<=ell<=8");
    });
}

inline CriterionResult koenig_property(const SweepConfig& cfg)
{
    return detail::timed(4, "subtree clutters are Koenig with constructive cover", [&](CriterionResult& r) {
        detail::Tally tally(r);
        Rng rng(cfg.seed);
        for (int i = 0; i < cfg.random_clutters; ++i) {
            const int n = rng.between(1, 12);
            const Forest forest = random_forest(n, rng);
            const Clutter clutter = random_subtree_clutter(forest, rng, rng.between(1, 2 * n));
            tally.run("clutter #" + std::to_string(i), [&] {
                const CoverReport report = cover_report(clutter);
                if (report.alpha0 != report.beta1)
                    return false;
                const VertexSet cover = constructive_cover(forest, clutter, report.witness_matching);
                return cover.size() == report.beta1 && is_transversal(clutter, cover);
            });
        }
        tally.finish(std::to_string(r.cases) + " random subtree clutters: alpha0 = beta1 and the constructed "
                                               "cover is a minimum transversal");
    });
}

inline CriterionResult cm_classification(const SweepConfig& cfg)
{
    return detail::timed(5, "CM path ideals of trees are suspensions", [&](CriterionResult& r) {
        detail::Tally tally(r);
        OracleOptions options;
        options.field = cfg.field;
        options.vertex_cap = std::max(cfg.oracle_cap, cfg.tree_max_n);
        int cm_count = 0;
        for (int n = 1; n <= cfg.tree_max_n; ++n)
            for (const Forest& tree : enumerate_unlabeled_trees(n))
                for (int ell = 1; ell <= 3; ++ell)
                    tally.run(detail::pair_label(n, ell) + " tree " + canonical_form(tree), [&] {
                        const bool oracle = depth(path_clutter(tree, ell), options).is_cm;
                        cm_count += oracle ? 1 : 0;
                        return classify_cm_path_ideal(tree, ell).is_cm == oracle;
                    });
        tally.finish("all trees on <= " + std::to_string(cfg.tree_max_n) + " vertices, ell in {1,2,3}; " +
                     std::to_string(cm_count) + " CM cases");
    });
}

inline CriterionResult formula_identities(const SweepConfig&)
{
    return detail::timed(6, "depth formula reformulations", [&](CriterionResult& r) {
        detail::Tally tally(r);
        for (int n = 1; n <= 200; ++n)
            for (int ell = 1; ell <= n + 2; ++ell)
                tally.run(detail::pair_label(n, ell), [&] {
                    const int d = spine_depth(n, ell);
                    if (d != spine_depth_ceilsum(n, ell) || d != spine_depth_mform(n, ell))
                        return false;
                    if (ell >= n)
                        return d == n;
                    if (ell == n - 1)
                        return d == n - 1;
                    if (2 * ell >= n - 2)
                        return d == n - 2;
                    return true;
                });
        tally.finish("ceil-sum and m-form agree for n <= 200, ell <= n+2; n, n-1, n-2 branches hold");
    });
}

inline CriterionResult stanley_bound(const SweepConfig&)
{
    return detail::timed(7, "Stanley depth lower bound meets the depth", [&](CriterionResult& r) {
        detail::Tally tally(r);
        for (int n = 1; n <= 200; ++n)
            for (int ell = 1; ell <= n + 2; ++ell)
                tally.run(detail::pair_label(n, ell),
                          [&] { return spine_sdepth_lower(n, ell) == spine_depth(n, ell); });
        tally.finish("chain bound equals the depth formula for n <= 200, ell <= n+2 (formula level)");
    });
}

inline CriterionResult non_simplicial_example(const SweepConfig&)
{
    return detail::timed(8, "three triangles on four vertices", [&](CriterionResult& r) {
        detail::Tally tally(r);
        const Clutter c(4, {VertexSet{1, 2, 3}, VertexSet{1, 2, 4}, VertexSet{1, 3, 4}});
        const SimplicialComplex delta = SimplicialComplex::facet_complex(c);
        tally.run("subtree clutter of the star", [&] { return is_subtree_clutter(make_star(4), c); });
        tally.run("no leaf", [&] { return !find_leaf(delta).has_value(); });
        tally.run("not a simplicial tree", [&] { return !is_simplicial_tree(delta); });
        tally.run("special odd cycle", [&] {
            const SpecialCycle expected{{3, 2, 4}, {VertexSet{1, 2, 3}, VertexSet{1, 2, 4}, VertexSet{1, 3, 4}}};
            const auto found = find_special_odd_cycle(delta);
            return is_special_cycle(delta, expected) && found && detail::same_cycle(*found, expected);
        });
        tally.run("alpha0 = beta1 = 1", [&] {
            const CoverReport report = cover_report(c);
            return report.alpha0 == 1 && report.beta1 == 1;
        });
        tally.finish("subtree clutter, no leaf, odd special cycle 3,{123},2,{124},4,{134},3, alpha0 = beta1 = 1");
    });
}

inline CriterionResult good_spanning_trees(const SweepConfig& cfg)
{
    return detail::timed(9, "good spanning trees of simplicial trees", [&](CriterionResult& r) {
        detail::Tally tally(r);
        Rng rng(cfg.seed + 1);
        int swaps = 0;
        for (int i = 0; i < cfg.random_simplicial_trees; ++i) {
            const SimplicialComplex delta = random_simplicial_tree(rng, 8, 12);
            tally.run("complex #" + std::to_string(i), [&] {
                const GoodTreeTrace trace = good_spanning_tree_traced(delta);
                swaps += static_cast<int>(trace.swaps.size());
                const bool growing = std::all_of(trace.swaps.begin(), trace.swaps.end(),
                                                 [](const SwapStep& s) { return s.edges_after > s.edges_before; });
                return growing && is_good_spanning_tree(delta, trace.tree);
            });
        }
        tally.finish(std::to_string(r.cases) + " random simplicial trees, " + std::to_string(swaps) +
                     " edge exchanges, each growing F ∩ G ∩ T");
    });
}

inline std::vector<CriterionResult> run_all(const SweepConfig& cfg)
{
    return {spine_depth_exactness(cfg), worked_example(cfg),    explicit_forms(cfg),
            koenig_property(cfg),       cm_classification(cfg), formula_identities(cfg),
            stanley_bound(cfg),         non_simplicial_example(cfg), good_spanning_trees(cfg)};
}

} // namespace pathideal::sweep
