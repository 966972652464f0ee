#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathideal/clutter.hpp"
#include "pathideal/error.hpp"
#include "pathideal/forest.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

/**
 * A simplicial complex given by its facets (an antichain, sorted
 * lexicographically). Faces are implicit.
 *
 * The complex {∅} whose only face is the empty set is written with the
 * single facet ∅; an empty facet list is the void complex.
 */
class SimplicialComplex
{
public:
    SimplicialComplex() = default;
    SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets))
    {
        if (n < 1 || n > kMaxVertices)
            throw Error(ErrorCode::VertexOutOfRange, "vertex count " + std::to_string(n));
        std::sort(facets_.begin(), facets_.end());
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (!facets_[i].subset_of(VertexSet::range(n)))
                throw Error(ErrorCode::VertexOutOfRange, "facet " + facets_[i].to_string());
            if (facets_[i].empty() && facets_.size() > 1)
                throw Error(ErrorCode::NotAntichain, "the empty face cannot be a facet next to others");
            if (i > 0 && facets_[i] == facets_[i - 1])
                throw Error(ErrorCode::DuplicateEdge, "facet " + facets_[i].to_string());
        }
        for (VertexSet a : facets_)
            for (VertexSet b : facets_)
                if (a != b && a.subset_of(b))
                    throw Error(ErrorCode::NotAntichain, a.to_string() + " inside " + b.to_string());
    }

    /// Facet complex of a clutter: the facets are the clutter's edges.
    static SimplicialComplex facet_complex(const Clutter& c) { return {c.n_vertices(), c.edges()}; }

    int n_vertices() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    /// Union of the facets.
    VertexSet vertices() const
    {
        VertexSet s;
        for (VertexSet f : facets_)
            s |= f;
        return s;
    }

    bool contains_face(VertexSet s) const
    {
        return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return s.subset_of(f); });
    }

    /// Largest face dimension; -1 for {∅}, -2 for the void complex.
    int dimension() const
    {
        int d = -2;
        for (VertexSet f : facets_)
            d = std::max(d, f.size() - 1);
        return d;
    }

    SimplicialComplex without_facet(VertexSet f) const
    {
        SimplicialComplex out = *this;
        out.facets_.erase(std::remove(out.facets_.begin(), out.facets_.end(), f), out.facets_.end());
        return out;
    }

    bool operator==(const SimplicialComplex&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> facets_;
};

/// A general simple graph (may have cycles).
struct Graph
{
    int n_vertices = 0;
    VertexSet vertices;
    std::vector<Edge> edges;
};

/// The Stanley-Reisner complex of a clutter: faces are the vertex sets
/// containing no edge. Facets are found by depth-first growth of
/// independent sets, keeping the maximal ones.
inline SimplicialComplex independence_complex(const Clutter& c)
{
    const std::vector<int> order = c.vertices().to_vector();
    std::vector<VertexSet> facets;
    auto independent_with = [&](VertexSet s, int v) {
        s.insert(v);
        return std::none_of(c.edges().begin(), c.edges().end(), [&](VertexSet e) { return e.subset_of(s) && e.contains(v); });
    };
    auto grow = [&](auto& self, std::size_t pos, VertexSet face) -> void {
        if (pos == order.size()) {
            for (int v : c.vertices() - face)
                if (independent_with(face, v))
                    return;
            facets.push_back(face);
            return;
        }
        const int v = order[pos];
        if (independent_with(face, v)) {
            VertexSet bigger = face;
            bigger.insert(v);
            self(self, pos + 1, bigger);
        }
        self(self, pos + 1, face);
    };
    grow(grow, 0, VertexSet{});
    return {c.n_vertices(), facets};
}

/// A leaf facet and its joint (joint is absent for a one-facet collection).
struct Leaf
{
    VertexSet facet;
    std::optional<VertexSet> joint;
};

namespace detail {

inline std::optional<Leaf> leaf_of(const std::vector<VertexSet>& collection)
{
    if (collection.size() == 1)
        return Leaf{collection.front(), std::nullopt};
    for (VertexSet f : collection) {
        for (VertexSet g : collection) {
            if (g == f)
                continue;
            const VertexSet shared = f & g;
            const bool dominates = std::all_of(collection.begin(), collection.end(), [&](VertexSet h) {
                return h == f || (f & h).subset_of(shared);
            });
            if (dominates)
                return Leaf{f, g};
        }
    }
    return std::nullopt;
}

inline bool facets_connected(const std::vector<VertexSet>& facets)
{
    if (facets.empty())
        return false;
    std::vector<bool> reached(facets.size(), false);
    reached[0] = true;
    VertexSet touched = facets[0];
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (!reached[i] && facets[i].intersects(touched)) {
                reached[i] = true;
                touched |= facets[i];
                grew = true;
            }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

inline void require_budget(const SimplicialComplex& delta, int budget)
{
    if (delta.facet_count() > budget)
        throw Error(ErrorCode::BudgetExceeded, std::to_string(delta.facet_count()) + " facets exceed budget " +
                                                   std::to_string(budget));
}

} // namespace detail

/// Lexicographically smallest leaf, with the smallest valid joint.
inline std::optional<Leaf> find_leaf(const SimplicialComplex& delta)
{
    if (delta.facets().empty())
        throw Error(ErrorCode::EmptyComplex, "no facets");
    return detail::leaf_of(delta.facets());
}

inline constexpr int kDefaultFacetBudget = 16;

/**
 * Connected, and every nonempty sub-collection of facets has a leaf.
 * Sub-collections are taken as subsets of the facet list.
 */
inline bool is_simplicial_tree(const SimplicialComplex& delta, int facet_budget = kDefaultFacetBudget)
{
    if (delta.facets().empty())
        throw Error(ErrorCode::EmptyComplex, "no facets");
    detail::require_budget(delta, facet_budget);
    const auto& facets = delta.facets();
    if (!detail::facets_connected(facets))
        return false;
    const std::uint32_t count = static_cast<std::uint32_t>(facets.size());
    std::vector<VertexSet> sub;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << count); ++mask) {
        if ((mask & (mask - 1)) == 0)
            continue;
        sub.clear();
        for (std::uint32_t i = 0; i < count; ++i)
            if ((mask >> i) & 1U)
                sub.push_back(facets[i]);
        if (!detail::leaf_of(sub))
            return false;
    }
    return true;
}

/// x_0, F_1, x_1, ..., F_s, x_s = x_0; `vertices` holds x_0..x_{s-1}.
struct SpecialCycle
{
    std::vector<int> vertices;
    std::vector<VertexSet> facets;

    int length() const { return static_cast<int>(facets.size()); }
};

/// Checks the alternating membership conditions and that each F_i is a facet.
inline bool is_special_cycle(const SimplicialComplex& delta, const SpecialCycle& cycle)
{
    const std::size_t s = cycle.facets.size();
    if (s < 3 || cycle.vertices.size() != s)
        return false;
    for (std::size_t i = 1; i <= s; ++i) {
        const VertexSet f = cycle.facets[i - 1];
        if (std::find(delta.facets().begin(), delta.facets().end(), f) == delta.facets().end())
            return false;
        for (std::size_t j = 0; j < s; ++j) {
            const bool incident = j == i - 1 || j == i % s;
            if (f.contains(cycle.vertices[j]) != incident)
                return false;
        }
    }
    return true;
}

namespace detail {

inline std::optional<SpecialCycle> find_special_cycle(const SimplicialComplex& delta, bool odd_only)
{
    const auto& facets = delta.facets();
    const VertexSet verts = delta.vertices();
    const int max_len = std::min(static_cast<int>(facets.size()), verts.size());
    SpecialCycle cycle;
    int s = 0;

    // Builds x_0, F_1, x_1, ... keeping the membership constraints valid
    // for every prefix; F_s must close back onto x_0.
    auto extend = [&](auto& self) -> bool {
        const std::size_t i = cycle.facets.size() + 1; // index of the next facet
        const int prev = cycle.vertices.back();
        for (VertexSet f : facets) {
            if (!f.contains(prev))
                continue;
            bool ok = true;
            for (std::size_t j = 0; j + 2 <= i && ok; ++j) {
                const bool allowed = (j == 0 && static_cast<int>(i) == s);
                if (j + 1 < i && f.contains(cycle.vertices[j]) && !allowed)
                    ok = false;
            }
            if (!ok)
                continue;
            if (static_cast<int>(i) == s) {
                if (!f.contains(cycle.vertices.front()))
                    continue;
                cycle.facets.push_back(f);
                return true;
            }
            if (std::find(cycle.facets.begin(), cycle.facets.end(), f) != cycle.facets.end())
                continue;
            cycle.facets.push_back(f);
            for (int x : f) {
                if (x == prev || x == cycle.vertices.front())
                    continue;
                const bool clash = std::any_of(cycle.facets.begin(), cycle.facets.end() - 1,
                                               [x](VertexSet g) { return g.contains(x); });
                if (clash)
                    continue;
                cycle.vertices.push_back(x);
                if (self(self))
                    return true;
                cycle.vertices.pop_back();
            }
            cycle.facets.pop_back();
        }
        return false;
    };

    for (s = 3; s <= max_len; ++s) {
        if (odd_only && s % 2 == 0)
            continue;
        for (int x0 : verts) {
            cycle.vertices = {x0};
            cycle.facets.clear();
            if (extend(extend))
                return cycle;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// A shortest special cycle of odd length at least 3, if any.
inline std::optional<SpecialCycle> find_special_odd_cycle(const SimplicialComplex& delta,
                                                          int facet_budget = kDefaultFacetBudget)
{
    detail::require_budget(delta, facet_budget);
    return detail::find_special_cycle(delta, true);
}

/// All pairs of vertices lying in a common facet.
inline Graph one_skeleton(const SimplicialComplex& delta)
{
    Graph g;
    g.n_vertices = delta.n_vertices();
    g.vertices = delta.vertices();
    for (int u : g.vertices)
        for (int v : g.vertices)
            if (u < v && delta.contains_face(VertexSet{u, v}))
                g.edges.emplace_back(u, v);
    return g;
}

/// Raised when a complex is not a simplicial tree; carries a special cycle
/// when one was found along the way.
class NotSimplicialTreeError : public Error
{
public:
    NotSimplicialTreeError(const std::string& message, std::optional<SpecialCycle> cycle)
        : Error(ErrorCode::NotSimplicialTree, message), cycle_(std::move(cycle))
    {
    }

    const std::optional<SpecialCycle>& cycle() const { return cycle_; }

private:
    std::optional<SpecialCycle> cycle_;
};

/// One edge exchange T <- T + {a,b} - removed, with the number of tree
/// edges inside F ∩ G before and after.
struct SwapStep
{
    int a = 0;
    int b = 0;
    Edge removed;
    int edges_before = 0;
    int edges_after = 0;
};

struct GoodTreeTrace
{
    Forest tree;
    std::vector<SwapStep> swaps;
};

/// True iff T is a spanning tree of the complex's vertices and T ∩ H is
/// connected for every facet H.
inline bool is_good_spanning_tree(const SimplicialComplex& delta, const Forest& tree)
{
    if (tree.vertices() != delta.vertices() || !tree.is_tree() || tree.edge_count() != tree.order() - 1)
        return false;
    return std::all_of(delta.facets().begin(), delta.facets().end(), [&](VertexSet h) {
        return h.empty() || tree.components_within(h).size() == 1;
    });
}

namespace detail {

inline int edges_inside(const std::vector<Edge>& edges, VertexSet s)
{
    return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                          [s](Edge e) { return s.contains(e.first) && s.contains(e.second); }));
}

/// The special cycle assembled when no path edge can be exchanged: pick for
/// every path edge a facet H_i != G holding it but not both a and b, then
/// hop along the path by the last facet reaching each vertex.
inline std::optional<SpecialCycle> exchange_obstruction(const SimplicialComplex& delta,
                                                        const std::vector<int>& path, VertexSet leaf,
                                                        VertexSet joint)
{
    const std::size_t s = path.size() - 1;
    const int a = path.front();
    const int b = path.back();
    std::vector<VertexSet> holder(s + 1);
    for (std::size_t i = 1; i <= s; ++i) {
        const VertexSet e{path[i - 1], path[i]};
        bool found = false;
        for (VertexSet h : delta.facets()) {
            if (h == joint || h == leaf || !e.subset_of(h) || (h.contains(a) && h.contains(b)))
                continue;
            holder[i] = h;
            found = true;
            break;
        }
        if (!found)
            return std::nullopt;
    }
    auto last_holder = [&](int vertex) {
        std::size_t j = 0;
        for (std::size_t i = 1; i <= s; ++i)
            if (holder[i].contains(vertex))
                j = i;
        return j;
    };
    auto last_vertex = [&](VertexSet h) {
        std::size_t k = 0;
        for (std::size_t i = 1; i <= s + 1; ++i)
            if (h.contains(path[i - 1]))
                k = i;
        return k;
    };

    SpecialCycle cycle;
    cycle.vertices.push_back(a);
    int reach = a;
    std::size_t k = 1;
    while (k != s + 1) {
        const std::size_t j = last_holder(reach);
        if (j == 0)
            return std::nullopt;
        const std::size_t next = last_vertex(holder[j]);
        if (next <= k)
            return std::nullopt;
        k = next;
        reach = path[k - 1];
        cycle.facets.push_back(holder[j]);
        cycle.vertices.push_back(reach);
    }
    cycle.vertices.pop_back();
    cycle.vertices.push_back(b);
    cycle.facets.push_back(leaf);
    if (!is_special_cycle(delta, cycle))
        return std::nullopt;
    return cycle;
}

} // namespace detail

/**
 * A spanning tree T of the one-skeleton such that T ∩ H is connected for
 * every facet H.
 *
 * Facets are peeled as leaves (smallest leaf first) until one remains,
 * whose star at its smallest vertex starts the tree. Each peeled leaf F with
 * joint G is then put back in reverse order: while F ∩ G ∩ T is
 * disconnected, the closest disconnected pair a, b of F ∩ G is joined and
 * the first edge of the a-b path whose every containing facet holds both a
 * and b is dropped; then the vertices of F \ G are hung off min(F ∩ G).
 */
inline GoodTreeTrace good_spanning_tree_traced(const SimplicialComplex& delta, bool check_tree = true)
{
    if (delta.facets().empty())
        throw Error(ErrorCode::EmptyComplex, "no facets");
    if (check_tree && !is_simplicial_tree(delta))
        throw NotSimplicialTreeError("complex is not a simplicial tree",
                                     delta.facet_count() <= kDefaultFacetBudget ? detail::find_special_cycle(delta, true)
                                                                                : std::nullopt);
    const int n = delta.n_vertices();

    std::vector<std::pair<VertexSet, VertexSet>> peeled;
    std::vector<VertexSet> rest = delta.facets();
    while (rest.size() > 1) {
        const auto leaf = detail::leaf_of(rest);
        if (!leaf)
            throw NotSimplicialTreeError("a sub-collection of facets has no leaf",
                                         detail::find_special_cycle(SimplicialComplex(n, rest), true));
        peeled.emplace_back(leaf->facet, *leaf->joint);
        rest.erase(std::find(rest.begin(), rest.end(), leaf->facet));
    }

    GoodTreeTrace trace;
    VertexSet vertices = rest.front();
    std::vector<Edge> edges;
    const int root = vertices.min();
    for (int v : vertices)
        if (v != root)
            edges.emplace_back(root, v);

    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        const auto [leaf, joint] = *it;
        const VertexSet shared = leaf & joint;
        if (shared.empty())
            throw NotSimplicialTreeError("leaf " + leaf.to_string() + " does not meet its joint", std::nullopt);

        while (true) {
            const Forest t = Forest::build_on(n, vertices, edges);
            const auto pieces = t.components_within(shared);
            if (pieces.size() == 1)
                break;

            int a = 0;
            int b = 0;
            int best = kMaxVertices + 1;
            for (int u : shared)
                for (int v : shared) {
                    if (u >= v)
                        continue;
                    if (t.reach(u, shared).contains(v))
                        continue;
                    const int d = *t.distance(u, v);
                    if (d < best) {
                        best = d;
                        a = u;
                        b = v;
                    }
                }
            const std::vector<int> path = t.path_between(a, b);
            std::optional<Edge> drop;
            for (std::size_t i = 0; i + 1 < path.size() && !drop; ++i) {
                const VertexSet e{path[i], path[i + 1]};
                const bool exchangeable = std::all_of(delta.facets().begin(), delta.facets().end(), [&](VertexSet h) {
                    return !e.subset_of(h) || (h.contains(a) && h.contains(b));
                });
                if (exchangeable)
                    drop = Edge{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])};
            }
            if (!drop)
                throw NotSimplicialTreeError("no exchangeable edge between " + std::to_string(a) + " and " +
                                                 std::to_string(b),
                                             detail::exchange_obstruction(delta, path, leaf, joint));

            SwapStep step;
            step.a = a;
            step.b = b;
            step.removed = *drop;
            step.edges_before = detail::edges_inside(edges, shared);
            const auto dropped = std::find(edges.begin(), edges.end(), *drop);
            if (dropped == edges.end())
                throw Error(ErrorCode::InternalContradiction, "exchange edge missing from the tree");
            edges.erase(dropped);
            edges.emplace_back(a, b);
            step.edges_after = detail::edges_inside(edges, shared);
            if (step.edges_after <= step.edges_before)
                throw Error(ErrorCode::InternalContradiction, "edge exchange did not grow F ∩ G ∩ T");
            trace.swaps.push_back(step);
        }

        const int anchor = shared.min();
        for (int y : leaf - joint) {
            vertices.insert(y);
            edges.emplace_back(std::min(anchor, y), std::max(anchor, y));
        }
    }

    std::sort(edges.begin(), edges.end());
    trace.tree = Forest::build_on(n, vertices, edges);
    if (!is_good_spanning_tree(delta, trace.tree))
        throw Error(ErrorCode::InternalContradiction, "constructed tree is not a good spanning tree");
    return trace;
}

inline Forest good_spanning_tree(const SimplicialComplex& delta, bool check_tree = true)
{
    return good_spanning_tree_traced(delta, check_tree).tree;
}

struct SubtreeRepresentation
{
    Forest tree;
    bool confirmed = false;
};

/// Represents the clutter's ideal as a subtree ideal of a good spanning
/// tree of its facet complex, and confirms every edge is a subtree.
inline SubtreeRepresentation clutter_as_subtree_ideal(const Clutter& c)
{
    const Forest tree = good_spanning_tree(SimplicialComplex::facet_complex(c));
    bool confirmed = true;
    for (VertexSet e : c.edges())
        confirmed = confirmed && tree.is_subtree(e);
    return {tree, confirmed};
}

} // namespace pathideal
