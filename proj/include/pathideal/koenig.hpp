#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathideal/clutter.hpp"
#include "pathideal/error.hpp"
#include "pathideal/forest.hpp"

namespace pathideal {

/// A set of pairwise disjoint clutter edges.
using IndependentSet = std::vector<VertexSet>;

namespace detail {

inline void require_independent(const Clutter& c, const IndependentSet& e)
{
    if (!is_pairwise_disjoint(e))
        throw Error(ErrorCode::NotIndependent, "edges are not pairwise disjoint");
    for (VertexSet edge : e)
        if (!c.contains_edge(edge))
            throw Error(ErrorCode::EdgeNotInSet, edge.to_string() + " is not an edge of the clutter");
}

inline int count_inside(const IndependentSet& e, VertexSet within)
{
    return static_cast<int>(std::count_if(e.begin(), e.end(), [within](VertexSet s) { return s.subset_of(within); }));
}

} // namespace detail

/**
 * beta1 of the subclutter on a vertex set, cached by that vertex set.
 *
 * Within one certification run the clutter only shrinks by vertex
 * deletions, so the edges inside a component are determined by the
 * component's vertices alone and the cache stays valid.
 */
class MatchingCache
{
public:
    explicit MatchingCache(const Clutter& original) : original_(original) {}

    int beta1(VertexSet within)
    {
        const auto it = cache_.find(within.bits());
        if (it != cache_.end())
            return it->second;
        const int value = max_independent_edges(original_.restrict_to(within)).beta1;
        cache_.emplace(within.bits(), value);
        return value;
    }

private:
    Clutter original_;
    std::unordered_map<std::uint64_t, int> cache_;
};

/// True iff no independent set of clutter edges inside `component` beats
/// the number of E's edges inside it.
inline bool is_maximal_on_component(const Forest& forest, const Clutter& clutter, const IndependentSet& e,
                                    VertexSet component)
{
    detail::require_independent(clutter, e);
    if (!component.subset_of(forest.vertices()))
        throw Error(ErrorCode::VertexOutOfRange, "component " + component.to_string());
    const int best = max_independent_edges(clutter.restrict_to(component)).beta1;
    return detail::count_inside(e, component) >= best;
}

/// The vertex found by the leaf walk plus the vertices it stepped through.
struct ReleaseWalk
{
    int vertex = 0;
    std::vector<int> visited;
    /// Non-maximal component count seen at each step (never above one).
    std::vector<int> non_maximal_counts;
};

namespace detail {

inline ReleaseWalk release_walk(const Forest& forest, const IndependentSet& e, VertexSet edge,
                                MatchingCache& cache)
{
    const IndependentSet rest = [&] {
        IndependentSet r;
        for (VertexSet s : e)
            if (s != edge)
                r.push_back(s);
        return r;
    }();

    // The walk starts at the smallest leaf of the subtree `edge`; a
    // single-vertex edge is its own leaf.
    int current = edge.min();
    for (int v : edge)
        if ((forest.neighbors(v) & edge).size() <= 1) {
            current = v;
            break;
        }

    const VertexSet tree = forest.component_of(current);
    ReleaseWalk walk;
    VertexSet seen;
    while (true) {
        if (seen.contains(current))
            throw Error(ErrorCode::InternalContradiction, "release walk revisited vertex " + std::to_string(current));
        seen.insert(current);
        walk.visited.push_back(current);

        VertexSet remaining = tree;
        remaining.erase(current);
        std::vector<VertexSet> bad;
        for (VertexSet comp : forest.components_within(remaining))
            if (count_inside(rest, comp) < cache.beta1(comp))
                bad.push_back(comp);
        walk.non_maximal_counts.push_back(static_cast<int>(bad.size()));

        if (bad.empty()) {
            walk.vertex = current;
            return walk;
        }
        if (bad.size() > 1)
            throw Error(ErrorCode::InternalContradiction,
                        "more than one non-maximal component after deleting " + std::to_string(current));
        const VertexSet step = forest.neighbors(current) & edge & bad.front();
        if (step.size() != 1)
            throw Error(ErrorCode::InternalContradiction,
                        "non-maximal component does not continue the walk inside " + edge.to_string());
        current = step.min();
    }
}

inline void require_maximum(const Forest& forest, const IndependentSet& e, MatchingCache& cache)
{
    for (VertexSet comp : forest.components())
        if (count_inside(e, comp) < cache.beta1(comp))
            throw Error(ErrorCode::NotMaximal, "independent set is not maximal on component " + comp.to_string());
}

} // namespace detail

/**
 * Walks from a leaf of `edge` towards the component whose restriction of
 * E \ {edge} fails to be maximal, and stops at the first vertex v for which
 * E \ {edge} is a maximum independent set of the clutter with v deleted.
 * Returns the full trace.
 */
inline ReleaseWalk release_walk(const Forest& forest, const Clutter& clutter, const IndependentSet& e,
                                VertexSet edge)
{
    detail::require_independent(clutter, e);
    if (std::find(e.begin(), e.end(), edge) == e.end())
        throw Error(ErrorCode::EdgeNotInSet, edge.to_string() + " is not in the independent set");
    MatchingCache cache(clutter);
    detail::require_maximum(forest, e, cache);
    return detail::release_walk(forest, e, edge, cache);
}

inline int find_releasing_vertex(const Forest& forest, const Clutter& clutter, const IndependentSet& e,
                                 VertexSet edge)
{
    return release_walk(forest, clutter, e, edge).vertex;
}

/**
 * Turns a maximum independent set of a subtree clutter into a vertex cover
 * of the same size: release one vertex per edge of E (in the given order)
 * and delete it.
 */
inline VertexSet constructive_cover(const Forest& forest, const Clutter& clutter, const IndependentSet& e)
{
    detail::require_independent(clutter, e);
    if (!is_subtree_clutter(forest, clutter))
        throw Error(ErrorCode::NotSubtreeClutter, "every clutter edge must be a subtree of the forest");

    MatchingCache cache(clutter);
    detail::require_maximum(forest, e, cache);

    Forest f = forest;
    Clutter c = clutter;
    IndependentSet remaining = e;
    VertexSet cover;
    for (VertexSet edge : e) {
        const int v = detail::release_walk(f, remaining, edge, cache).vertex;
        cover.insert(v);
        f = f.delete_vertex(v);
        c = c.delete_vertex(v);
        remaining.erase(std::find(remaining.begin(), remaining.end(), edge));
    }
    if (!c.empty())
        throw Error(ErrorCode::InternalContradiction,
                    std::to_string(c.edge_count()) + " edges survive the released vertices");
    return cover;
}

} // namespace pathideal
