#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathideal/error.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

using Edge = std::pair<int, int>;

/**
 * An undirected acyclic graph on 1-based vertex indices.
 *
 * Vertex indices are stable: deleting a vertex removes it from vertices()
 * and drops its incident edges, but never renumbers the rest. The ambient
 * index bound n_vertices() is therefore fixed for the lifetime of a value
 * and of everything derived from it.
 */
class Forest
{
public:
    Forest() = default;

    /// Validating constructor; every index in 1..n is a vertex.
    static Forest build(int n, const std::vector<Edge>& edges)
    {
        return build_on(n, VertexSet::range(n), edges);
    }

    /// Same as build() but only `vertices` are present.
    static Forest build_on(int n, VertexSet vertices, const std::vector<Edge>& edges)
    {
        if (n < 1 || n > kMaxVertices)
            throw Error(ErrorCode::VertexOutOfRange,
                        "vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
        if (!vertices.subset_of(VertexSet::range(n)))
            throw Error(ErrorCode::VertexOutOfRange, "vertex set exceeds n");

        Forest f;
        f.n_ = n;
        f.alive_ = vertices;
        f.adj_.assign(static_cast<std::size_t>(n) + 1, VertexSet{});

        std::vector<int> parent(static_cast<std::size_t>(n) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };

        for (auto [u, v] : edges) {
            if (!vertices.contains(u) || !vertices.contains(v))
                throw Error(ErrorCode::VertexOutOfRange,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw Error(ErrorCode::CycleDetected, "self-loop at " + std::to_string(u));
            if (f.adj_[u].contains(v))
                throw Error(ErrorCode::DuplicateEdge,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            const int ru = find(u);
            const int rv = find(v);
            if (ru == rv)
                throw Error(ErrorCode::CycleDetected,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") closes a cycle");
            parent[ru] = rv;
            f.adj_[u].insert(v);
            f.adj_[v].insert(u);
        }
        return f;
    }

    int n_vertices() const { return n_; }
    VertexSet vertices() const { return alive_; }
    int order() const { return alive_.size(); }

    VertexSet neighbors(int v) const
    {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return neighbors(v).size(); }
    bool has_edge(int u, int v) const
    {
        return alive_.contains(u) && alive_.contains(v) && adj_[u].contains(v);
    }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u : alive_)
            for (int v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }
    int edge_count() const
    {
        int twice = 0;
        for (int u : alive_)
            twice += adj_[u].size();
        return twice / 2;
    }

    /// Degree-one vertices.
    VertexSet leaves() const
    {
        VertexSet out;
        for (int v : alive_)
            if (adj_[v].size() == 1)
                out.insert(v);
        return out;
    }

    /// Vertices reachable from v inside `within` (v must belong to `within`).
    VertexSet reach(int v, VertexSet within) const
    {
        VertexSet seen{v};
        VertexSet frontier{v};
        while (!frontier.empty()) {
            VertexSet next;
            for (int u : frontier)
                next |= adj_[u];
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    VertexSet component_of(int v) const
    {
        check_vertex(v);
        return reach(v, alive_);
    }

    /// Connected components ordered by smallest vertex.
    std::vector<VertexSet> components() const { return components_within(alive_); }

    /// Components of the subgraph induced on `within`.
    std::vector<VertexSet> components_within(VertexSet within) const
    {
        std::vector<VertexSet> out;
        VertexSet rest = within & alive_;
        while (!rest.empty()) {
            const VertexSet comp = reach(rest.min(), rest);
            out.push_back(comp);
            rest -= comp;
        }
        return out;
    }

    int component_count() const { return static_cast<int>(components().size()); }
    bool is_tree() const { return !alive_.empty() && component_count() == 1; }

    /// Removes v and its incident edges; the other indices are unchanged.
    Forest delete_vertex(int v) const
    {
        check_vertex(v);
        Forest f = *this;
        for (int u : adj_[v])
            f.adj_[u].erase(v);
        f.adj_[v] = {};
        f.alive_.erase(v);
        return f;
    }

    Forest delete_vertices(VertexSet s) const
    {
        Forest f = *this;
        for (int v : s & alive_)
            f = f.delete_vertex(v);
        return f;
    }

    Forest delete_edge(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        if (!adj_[u].contains(v))
            throw Error(ErrorCode::EdgeNotPresent,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        Forest f = *this;
        f.adj_[u].erase(v);
        f.adj_[v].erase(u);
        return f;
    }

    /// Induced subforest on s (vertices outside s are deleted).
    Forest induced(VertexSet s) const { return delete_vertices(alive_ - s); }

    /// Vertex sequence of the unique u-v path; empty when unreachable.
    std::vector<int> path_between(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        std::vector<int> parent(static_cast<std::size_t>(n_) + 1, 0);
        std::vector<int> queue{u};
        parent[u] = u;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            if (x == v)
                break;
            for (int y : adj_[x])
                if (parent[y] == 0) {
                    parent[y] = x;
                    queue.push_back(y);
                }
        }
        if (parent[v] == 0)
            return {};
        std::vector<int> path{v};
        while (path.back() != u)
            path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    /// Number of edges on the u-v path, or nullopt across components.
    std::optional<int> distance(int u, int v) const
    {
        const auto path = path_between(u, v);
        if (path.empty())
            return std::nullopt;
        return static_cast<int>(path.size()) - 1;
    }

    /// True iff the induced subgraph on s is connected.
    bool is_subtree(VertexSet s) const
    {
        if (s.empty())
            throw Error(ErrorCode::EmptySet, "subtree test on the empty set");
        if (!s.subset_of(alive_))
            throw Error(ErrorCode::VertexOutOfRange, s.to_string() + " is not inside the forest");
        return reach(s.min(), s) == s;
    }

    /**
     * Every path with `ell` edges, listed once as an ordered vertex sequence
     * whose first endpoint is the smaller one. Sorted by vertex set.
     */
    std::vector<std::vector<int>> enumerate_ordered_paths(int ell) const
    {
        std::vector<std::vector<int>> out;
        if (ell < 1)
            throw Error(ErrorCode::InvalidArgument, "path length must be positive");
        if (ell >= order())
            return out;
        std::vector<int> walk;
        VertexSet used;
        auto extend = [&](auto& self) -> void {
            if (static_cast<int>(walk.size()) == ell + 1) {
                if (walk.front() < walk.back())
                    out.push_back(walk);
                return;
            }
            for (int y : adj_[walk.back()] - used) {
                walk.push_back(y);
                used.insert(y);
                self(self);
                used.erase(y);
                walk.pop_back();
            }
        };
        for (int start : alive_) {
            walk = {start};
            used = VertexSet{start};
            extend(extend);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return VertexSet::of(a) < VertexSet::of(b);
        });
        return out;
    }

    std::vector<VertexSet> enumerate_paths(int ell) const
    {
        std::vector<VertexSet> out;
        for (const auto& p : enumerate_ordered_paths(ell))
            out.push_back(VertexSet::of(p));
        return out;
    }

    bool operator==(const Forest& other) const
    {
        return n_ == other.n_ && alive_ == other.alive_ && edges() == other.edges();
    }

private:
    void check_vertex(int v) const
    {
        if (!alive_.contains(v))
            throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    }

    int n_ = 0;
    VertexSet alive_;
    std::vector<VertexSet> adj_;
};

inline Forest build_forest(int n, const std::vector<Edge>& edges) { return Forest::build(n, edges); }

/// The spine S_n: 1 - 2 - ... - n.
inline Forest make_spine(int n)
{
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    return Forest::build(n, edges);
}

/// Star with center 1 and leaves 2..n.
inline Forest make_star(int n)
{
    std::vector<Edge> edges;
    for (int i = 2; i <= n; ++i)
        edges.emplace_back(1, i);
    return Forest::build(n, edges);
}

} // namespace pathideal
