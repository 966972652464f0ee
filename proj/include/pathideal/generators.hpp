#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathideal/clutter.hpp"
#include "pathideal/error.hpp"
#include "pathideal/forest.hpp"
#include "pathideal/simplicial.hpp"

namespace pathideal {

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation-defined).
class Rng
{
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0)
            throw Error(ErrorCode::InvalidArgument, "empty range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x = engine_();
        while (x >= limit)
            x = engine_();
        return x % bound;
    }

    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    bool chance(int numerator, int denominator) { return static_cast<int>(below(static_cast<std::uint64_t>(denominator))) < numerator; }

    template <class T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

    template <class T>
    const T& pick(const std::vector<T>& items)
    {
        return items[below(items.size())];
    }

    int pick(VertexSet s)
    {
        const std::vector<int> members = s.to_vector();
        return pick(members);
    }

private:
    std::mt19937_64 engine_;
};

/// Uniform labelled tree on 1..n from a random Pruefer sequence.
inline Forest random_tree(int n, Rng& rng)
{
    if (n < 1 || n > kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange, "tree size " + std::to_string(n));
    if (n == 1)
        return Forest::build(1, {});
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& x : code)
        x = rng.between(1, n);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int x : code)
        ++degree[static_cast<std::size_t>(x)];
    std::vector<Edge> edges;
    for (int x : code) {
        int leaf = 1;
        while (degree[static_cast<std::size_t>(leaf)] != 1)
            ++leaf;
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
    }
    std::vector<int> last;
    for (int v = 1; v <= n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return Forest::build(n, edges);
}

/// A random tree with each edge dropped with probability 1/4.
inline Forest random_forest(int n, Rng& rng)
{
    std::vector<Edge> kept;
    for (Edge e : random_tree(n, rng).edges())
        if (!rng.chance(1, 4))
            kept.push_back(e);
    return Forest::build(n, kept);
}

/**
 * Grows `count` random subtrees (random start, random size up to
 * `max_size`, one random neighbour at a time) and keeps the
 * inclusion-minimal ones. The clutter lives on all forest vertices.
 */
inline Clutter random_subtree_clutter(const Forest& forest, Rng& rng, int count, int max_size = 5)
{
    std::vector<VertexSet> sets;
    const std::vector<int> vertices = forest.vertices().to_vector();
    for (int i = 0; i < count; ++i) {
        const int start = rng.pick(vertices);
        const int target = rng.between(1, max_size);
        VertexSet grown{start};
        while (grown.size() < target) {
            VertexSet frontier;
            for (int v : grown)
                frontier |= forest.neighbors(v);
            frontier -= grown;
            if (frontier.empty())
                break;
            grown.insert(rng.pick(frontier));
        }
        sets.push_back(grown);
    }
    return Clutter::minimal(forest.n_vertices(), forest.vertices(), std::move(sets));
}

namespace detail {

inline std::string rooted_code(const Forest& tree, int root, int parent)
{
    std::vector<std::string> children;
    for (int w : tree.neighbors(root))
        if (w != parent)
            children.push_back(rooted_code(tree, w, root));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children)
        out += c;
    return out + ")";
}

} // namespace detail

/// Centres of a tree (one or two vertices), by repeated leaf removal.
inline VertexSet tree_centers(const Forest& tree)
{
    Forest rest = tree;
    while (rest.order() > 2)
        rest = rest.delete_vertices(rest.leaves());
    return rest.vertices();
}

/// AHU code rooted at the centre; equal exactly for isomorphic trees.
inline std::string canonical_form(const Forest& tree)
{
    if (!tree.is_tree())
        throw Error(ErrorCode::NotConnected, "canonical form needs a tree");
    std::string best;
    for (int c : tree_centers(tree)) {
        std::string code = detail::rooted_code(tree, c, 0);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

inline bool trees_isomorphic(const Forest& a, const Forest& b)
{
    return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

/// One representative of each isomorphism class of trees on n vertices,
/// labelled 1..n. Built by hanging a leaf on every vertex of the trees with
/// one vertex fewer and discarding repeated canonical forms.
inline std::vector<Forest> enumerate_unlabeled_trees(int n)
{
    if (n < 1 || n > 12)
        throw Error(ErrorCode::InvalidArgument, "tree enumeration supports 1 <= n <= 12");
    std::vector<std::vector<Edge>> level{{}};
    for (int k = 1; k < n; ++k) {
        std::vector<std::vector<Edge>> next;
        std::set<std::string> seen;
        for (const auto& edges : level)
            for (int v = 1; v <= k; ++v) {
                auto grown = edges;
                grown.emplace_back(v, k + 1);
                const std::string code = canonical_form(Forest::build(k + 1, grown));
                if (seen.insert(code).second)
                    next.push_back(std::move(grown));
            }
        level = std::move(next);
    }
    std::vector<Forest> out;
    for (const auto& edges : level)
        out.push_back(Forest::build(n, edges));
    return out;
}

/**
 * A random simplicial tree: each new facet takes a nonempty subset of an
 * existing facet plus at least one fresh vertex, then vertices are randomly
 * relabelled. Candidates failing is_simplicial_tree are redrawn.
 */
inline SimplicialComplex random_simplicial_tree(Rng& rng, int max_facets = 8, int max_n = 12)
{
    if (max_facets < 1 || max_n < 1 || max_n > kMaxVertices)
        throw Error(ErrorCode::InvalidArgument, "simplicial tree limits must be positive");
    while (true) {
        const int facet_target = rng.between(1, max_facets);
        int used = rng.between(1, std::min(4, max_n));
        std::vector<VertexSet> facets{VertexSet::range(used)};
        while (static_cast<int>(facets.size()) < facet_target && used < max_n) {
            const VertexSet base = rng.pick(facets);
            VertexSet shared;
            for (int v : base)
                if (rng.chance(1, 2))
                    shared.insert(v);
            if (shared.empty())
                shared.insert(rng.pick(base));
            const int fresh = rng.between(1, std::min(3, max_n - used));
            VertexSet facet = shared;
            for (int i = 0; i < fresh; ++i)
                facet.insert(++used);
            facets.push_back(facet);
        }
        std::vector<int> labels(static_cast<std::size_t>(max_n));
        for (int i = 0; i < max_n; ++i)
            labels[static_cast<std::size_t>(i)] = i + 1;
        rng.shuffle(labels);
        std::vector<VertexSet> relabelled;
        for (VertexSet f : facets) {
            VertexSet g;
            for (int v : f)
                g.insert(labels[static_cast<std::size_t>(v - 1)]);
            relabelled.push_back(g);
        }
        SimplicialComplex delta(max_n, minimal_sets(relabelled));
        if (is_simplicial_tree(delta))
            return delta;
    }
}

} // namespace pathideal
