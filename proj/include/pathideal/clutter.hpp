#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pathideal/error.hpp"
#include "pathideal/forest.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

/// Drops duplicates and every set that strictly contains another; result is
/// sorted lexicographically.
inline std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        const bool redundant = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return k.subset_of(s); });
        if (!redundant)
            kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

/**
 * A clutter: a vertex set with an antichain of nonempty edges.
 *
 * Equivalently the minimal generators of a square-free monomial ideal.
 * Edges are kept sorted lexicographically. Like Forest, the clutter keeps
 * an ambient index bound n_vertices() and an explicit vertex set, so
 * deletion and contraction remove a vertex without renumbering.
 */
class Clutter
{
public:
    Clutter() = default;

    Clutter(int n, std::vector<VertexSet> edges) : Clutter(n, VertexSet::range(n), std::move(edges)) {}

    Clutter(int n, VertexSet vertices, std::vector<VertexSet> edges)
        : n_(n), vertices_(vertices), edges_(std::move(edges))
    {
        if (n < 1 || n > kMaxVertices)
            throw Error(ErrorCode::VertexOutOfRange, "vertex count " + std::to_string(n));
        if (!vertices_.subset_of(VertexSet::range(n)))
            throw Error(ErrorCode::VertexOutOfRange, "vertex set exceeds n");
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].empty())
                throw Error(ErrorCode::EmptyEdge, "clutter edges must be nonempty");
            if (!edges_[i].subset_of(vertices_))
                throw Error(ErrorCode::VertexOutOfRange, "edge " + edges_[i].to_string());
            if (i > 0 && edges_[i] == edges_[i - 1])
                throw Error(ErrorCode::DuplicateEdge, "edge " + edges_[i].to_string());
        }
        for (VertexSet a : edges_)
            for (VertexSet b : edges_)
                if (a != b && a.subset_of(b))
                    throw Error(ErrorCode::NotAntichain, a.to_string() + " inside " + b.to_string());
    }

    /// Builds the clutter of inclusion-minimal members of `sets`.
    static Clutter minimal(int n, VertexSet vertices, std::vector<VertexSet> sets)
    {
        return Clutter(n, vertices, minimal_sets(std::move(sets)));
    }
    static Clutter minimal(int n, std::vector<VertexSet> sets)
    {
        return minimal(n, VertexSet::range(n), std::move(sets));
    }

    int n_vertices() const { return n_; }
    VertexSet vertices() const { return vertices_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }

    bool contains_edge(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    /// Union of all edges.
    VertexSet support() const
    {
        VertexSet s;
        for (VertexSet e : edges_)
            s |= e;
        return s;
    }

    /// Edges lying entirely inside `within`, on the vertex set `within`.
    Clutter restrict_to(VertexSet within) const
    {
        within &= vertices_;
        std::vector<VertexSet> kept;
        for (VertexSet e : edges_)
            if (e.subset_of(within))
                kept.push_back(e);
        Clutter c;
        c.n_ = n_;
        c.vertices_ = within;
        c.edges_ = std::move(kept);
        return c;
    }

    /// Deletion: drop v and every edge through it.
    Clutter delete_vertex(int v) const
    {
        check_vertex(v);
        VertexSet rest = vertices_;
        rest.erase(v);
        return restrict_to(rest);
    }

    Clutter delete_vertices(VertexSet s) const { return restrict_to(vertices_ - s); }

    /// Contraction: drop v from the vertex set and from every edge, then
    /// keep the minimal edges. Contracting a singleton edge {v} would yield
    /// the unit ideal, which a clutter cannot hold.
    Clutter contract_vertex(int v) const
    {
        check_vertex(v);
        std::vector<VertexSet> sets;
        for (VertexSet e : edges_) {
            VertexSet f = e;
            f.erase(v);
            if (f.empty())
                throw Error(ErrorCode::EmptyEdge, "contracting " + std::to_string(v) +
                                                      " empties edge " + e.to_string());
            sets.push_back(f);
        }
        VertexSet rest = vertices_;
        rest.erase(v);
        return minimal(n_, rest, std::move(sets));
    }

    bool operator==(const Clutter&) const = default;

private:
    void check_vertex(int v) const
    {
        if (!vertices_.contains(v))
            throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    }

    int n_ = 0;
    VertexSet vertices_;
    std::vector<VertexSet> edges_;
};

inline Clutter delete_vertex_clutter(const Clutter& c, int v) { return c.delete_vertex(v); }
inline Clutter contract_vertex_clutter(const Clutter& c, int v) { return c.contract_vertex(v); }

/// The clutter of all paths with `ell` edges in `forest`.
inline Clutter path_clutter(const Forest& forest, int ell)
{
    return Clutter(forest.n_vertices(), forest.vertices(), forest.enumerate_paths(ell));
}

/// True iff every edge of c induces a connected subgraph of the forest.
inline bool is_subtree_clutter(const Forest& forest, const Clutter& c)
{
    if (forest.n_vertices() != c.n_vertices() || forest.vertices() != c.vertices())
        throw Error(ErrorCode::VertexCountMismatch, "forest and clutter vertex sets differ");
    return std::all_of(c.edges().begin(), c.edges().end(),
                       [&](VertexSet e) { return forest.is_subtree(e); });
}

inline bool is_transversal(const Clutter& c, VertexSet s)
{
    return std::all_of(c.edges().begin(), c.edges().end(), [s](VertexSet e) { return e.intersects(s); });
}

inline bool is_pairwise_disjoint(const std::vector<VertexSet>& sets)
{
    VertexSet seen;
    for (VertexSet s : sets) {
        if (s.intersects(seen))
            return false;
        seen |= s;
    }
    return true;
}

struct MatchingResult
{
    int beta1 = 0;
    std::vector<VertexSet> witness;
};

struct CoverResult
{
    int alpha0 = 0;
    VertexSet witness;
};

namespace detail {

class MatchingSearch
{
public:
    explicit MatchingSearch(const std::vector<VertexSet>& edges) : edges_(edges)
    {
        min_edge_size_ = std::numeric_limits<int>::max();
        for (VertexSet e : edges)
            min_edge_size_ = std::min(min_edge_size_, e.size());
    }

    MatchingResult run()
    {
        std::vector<int> all(edges_.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        search(all);
        MatchingResult r;
        r.beta1 = static_cast<int>(best_.size());
        for (int i : best_)
            r.witness.push_back(edges_[i]);
        return r;
    }

private:
    void search(const std::vector<int>& candidates)
    {
        const int here = static_cast<int>(current_.size());
        if (candidates.empty()) {
            if (here > static_cast<int>(best_.size()))
                best_ = current_;
            return;
        }
        VertexSet reachable;
        for (int i : candidates)
            reachable |= edges_[i];
        const int bound = std::min(static_cast<int>(candidates.size()), reachable.size() / min_edge_size_);
        if (here + bound <= static_cast<int>(best_.size()))
            return;

        const int v = reachable.min();
        std::vector<int> without_v;
        for (int i : candidates) {
            if (!edges_[i].contains(v)) {
                without_v.push_back(i);
                continue;
            }
            std::vector<int> next;
            for (int j : candidates)
                if (!edges_[j].intersects(edges_[i]))
                    next.push_back(j);
            current_.push_back(i);
            search(next);
            current_.pop_back();
        }
        search(without_v);
    }

    const std::vector<VertexSet>& edges_;
    int min_edge_size_ = 1;
    std::vector<int> current_;
    std::vector<int> best_;
};

/// Finds the lexicographically first minimum transversal by a vertex-order
/// include/exclude search with a packing lower bound.
class CoverSearch
{
public:
    explicit CoverSearch(const std::vector<VertexSet>& edges) : edges_(edges)
    {
        VertexSet support;
        for (VertexSet e : edges)
            support |= e;
        order_ = support.to_vector();
        suffix_.assign(order_.size() + 1, VertexSet{});
        for (std::size_t i = order_.size(); i-- > 0;) {
            suffix_[i] = suffix_[i + 1];
            suffix_[i].insert(order_[i]);
        }
    }

    CoverResult run()
    {
        best_size_ = std::numeric_limits<int>::max();
        std::vector<int> uncovered(edges_.size());
        for (std::size_t i = 0; i < uncovered.size(); ++i)
            uncovered[i] = static_cast<int>(i);
        search(0, VertexSet{}, uncovered);
        return {best_size_ == std::numeric_limits<int>::max() ? 0 : best_size_, best_};
    }

private:
    void search(std::size_t pos, VertexSet chosen, const std::vector<int>& uncovered)
    {
        if (uncovered.empty()) {
            if (chosen.size() < best_size_) {
                best_size_ = chosen.size();
                best_ = chosen;
            }
            return;
        }
        if (pos >= order_.size())
            return;

        const VertexSet undecided = suffix_[pos];
        VertexSet packed;
        int lower = chosen.size();
        for (int i : uncovered) {
            const VertexSet open = edges_[i] & undecided;
            if (!open.intersects(packed)) {
                packed |= open;
                ++lower;
            }
        }
        if (lower >= best_size_)
            return;

        const int v = order_[pos];
        const bool relevant = std::any_of(uncovered.begin(), uncovered.end(),
                                          [&](int i) { return edges_[i].contains(v); });
        if (!relevant) {
            search(pos + 1, chosen, uncovered);
            return;
        }

        VertexSet with = chosen;
        with.insert(v);
        std::vector<int> rest;
        for (int i : uncovered)
            if (!edges_[i].contains(v))
                rest.push_back(i);
        search(pos + 1, with, rest);

        const bool dead = std::any_of(uncovered.begin(), uncovered.end(),
                                      [&](int i) { return edges_[i].max() == v; });
        if (!dead)
            search(pos + 1, chosen, uncovered);
    }

    const std::vector<VertexSet>& edges_;
    std::vector<int> order_;
    std::vector<VertexSet> suffix_;
    int best_size_ = 0;
    VertexSet best_;
};

} // namespace detail

/// Exact maximum number of pairwise disjoint edges, with a witness.
inline MatchingResult max_independent_edges(const Clutter& c)
{
    if (c.empty())
        return {};
    return detail::MatchingSearch(c.edges()).run();
}

/// Exact minimum transversal; the witness is the lexicographically smallest one.
inline CoverResult min_vertex_cover(const Clutter& c)
{
    if (c.empty())
        return {};
    return detail::CoverSearch(c.edges()).run();
}

struct CoverReport
{
    int alpha0 = 0;
    VertexSet witness_cover;
    int beta1 = 0;
    std::vector<VertexSet> witness_matching;
};

inline CoverReport cover_report(const Clutter& c)
{
    const CoverResult cover = min_vertex_cover(c);
    const MatchingResult matching = max_independent_edges(c);
    if (cover.alpha0 < matching.beta1)
        throw Error(ErrorCode::InternalContradiction, "alpha0 < beta1");
    return {cover.alpha0, cover.witness, matching.beta1, matching.witness};
}

inline constexpr int kDefaultEdgeBudget = 24;

/**
 * All inclusion-minimal transversals, by incremental hitting-set
 * dualization (one edge at a time). Sorted lexicographically. The empty
 * clutter has the single minimal cover {}.
 */
inline std::vector<VertexSet> enumerate_minimal_covers(const Clutter& c, int edge_budget = kDefaultEdgeBudget)
{
    if (c.edge_count() > edge_budget)
        throw Error(ErrorCode::BudgetExceeded, std::to_string(c.edge_count()) + " edges exceed budget " +
                                                   std::to_string(edge_budget));
    std::vector<VertexSet> transversals{VertexSet{}};
    for (VertexSet e : c.edges()) {
        std::vector<VertexSet> next;
        for (VertexSet t : transversals) {
            if (t.intersects(e)) {
                next.push_back(t);
                continue;
            }
            for (int v : e) {
                VertexSet grown = t;
                grown.insert(v);
                next.push_back(grown);
            }
        }
        transversals = minimal_sets(std::move(next));
    }
    return transversals;
}

inline bool is_koenig(const Clutter& c)
{
    const CoverReport r = cover_report(c);
    return r.alpha0 == r.beta1;
}

inline bool is_unmixed(const Clutter& c, int edge_budget = kDefaultEdgeBudget)
{
    const auto covers = enumerate_minimal_covers(c, edge_budget);
    return std::all_of(covers.begin(), covers.end(), [&](VertexSet s) { return s.size() == covers.front().size(); });
}

/// alpha0 pairwise disjoint edges whose union is the whole vertex set, if any.
inline std::optional<std::vector<VertexSet>> find_perfect_matching_konig_type(const Clutter& c)
{
    const int target = min_vertex_cover(c).alpha0;
    std::vector<VertexSet> chosen;
    auto search = [&](auto& self, VertexSet covered) -> bool {
        if (covered == c.vertices())
            return static_cast<int>(chosen.size()) == target;
        if (static_cast<int>(chosen.size()) >= target)
            return false;
        const int v = (c.vertices() - covered).min();
        for (VertexSet e : c.edges()) {
            if (!e.contains(v) || e.intersects(covered))
                continue;
            chosen.push_back(e);
            if (self(self, covered | e))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (search(search, VertexSet{}))
        return chosen;
    return std::nullopt;
}

inline bool has_perfect_matching_konig_type(const Clutter& c)
{
    return find_perfect_matching_konig_type(c).has_value();
}

} // namespace pathideal
