#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pathideal/clutter.hpp"
#include "pathideal/error.hpp"
#include "pathideal/forest.hpp"

namespace pathideal {

/**
 * A partition of a tree into pendant paths [x, y_1, ..., y_ell] where every
 * y_k with k < ell has degree 2 and y_ell is a leaf. Paths are sorted by
 * their base vertex x.
 */
struct SuspensionWitness
{
    VertexSet base_vertices;
    std::vector<std::vector<int>> pendant_paths;
};

struct SuspensionResult
{
    std::optional<SuspensionWitness> witness;
    /// Why the tree is not a suspension; empty on success.
    std::string reason;

    explicit operator bool() const { return witness.has_value(); }
};

/// Hangs a fresh path of `ell` new vertices off every vertex of `base`.
/// The pendant path of the i-th base vertex (in increasing order) uses the
/// indices n + (i-1)*ell + 1 .. n + i*ell, nearest vertex first.
inline Forest build_suspension(const Forest& base, int ell)
{
    if (ell < 1)
        throw Error(ErrorCode::InvalidArgument, "suspension length must be positive");
    const int n = base.n_vertices();
    const int total = n + base.order() * ell;
    if (total > kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange, "suspension needs " + std::to_string(total) + " vertices");
    std::vector<Edge> edges = base.edges();
    VertexSet vertices = base.vertices();
    int next = n;
    for (int x : base.vertices()) {
        int prev = x;
        for (int k = 0; k < ell; ++k) {
            ++next;
            vertices.insert(next);
            edges.emplace_back(prev, next);
            prev = next;
        }
    }
    return Forest::build_on(total, vertices, edges);
}

/// Checks a witness against the definition directly.
inline bool is_valid_suspension_witness(const Forest& tree, int ell, const SuspensionWitness& w)
{
    VertexSet covered;
    VertexSet bases;
    for (const auto& path : w.pendant_paths) {
        if (static_cast<int>(path.size()) != ell + 1)
            return false;
        const VertexSet members = VertexSet::of(path);
        if (members.size() != ell + 1 || members.intersects(covered))
            return false;
        covered |= members;
        bases.insert(path.front());
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            if (!tree.has_edge(path[k], path[k + 1]))
                return false;
        for (int k = 1; k < ell; ++k)
            if (tree.degree(path[static_cast<std::size_t>(k)]) != 2)
                return false;
        if (tree.degree(path.back()) != 1)
            return false;
    }
    return covered == tree.vertices() && bases == w.base_vertices;
}

/**
 * Detects a suspension of length ell by peeling pendant chains from the
 * leaves.
 *
 * Unless the tree is itself a path on ell+1 vertices, a base vertex always
 * has a neighbour outside its own pendant path, so the leaves are exactly
 * the path ends y_ell and each chain is forced by walking ell steps inward.
 */
inline SuspensionResult is_suspension(const Forest& tree, int ell)
{
    if (ell < 1)
        throw Error(ErrorCode::InvalidArgument, "suspension length must be positive");
    if (!tree.is_tree())
        throw Error(ErrorCode::NotConnected, "suspension detection needs a tree");

    const int n = tree.order();
    if (n % (ell + 1) != 0)
        return {std::nullopt, std::to_string(n) + " vertices is not a multiple of " + std::to_string(ell + 1)};

    SuspensionWitness w;
    if (n == ell + 1) {
        const VertexSet ends = tree.leaves();
        if (n == 1 || ends.size() != 2 || tree.edge_count() != n - 1)
            return {std::nullopt, "a single pendant path must be the whole tree"};
        for (int v : tree.vertices())
            if (tree.degree(v) > 2)
                return {std::nullopt, "vertex " + std::to_string(v) + " branches"};
        std::vector<int> path = tree.path_between(ends.max(), ends.min());
        w.base_vertices.insert(path.front());
        w.pendant_paths.push_back(std::move(path));
        return {w, ""};
    }

    const VertexSet leaves = tree.leaves();
    if (leaves.size() != n / (ell + 1))
        return {std::nullopt, std::to_string(leaves.size()) + " leaves but " + std::to_string(n / (ell + 1)) +
                                  " pendant paths required"};

    VertexSet covered;
    for (int leaf : leaves) {
        std::vector<int> chain{leaf};
        int prev = 0;
        int cur = leaf;
        for (int step = 1; step <= ell; ++step) {
            if (cur != leaf && tree.degree(cur) != 2)
                return {std::nullopt, "vertex " + std::to_string(cur) + " inside a pendant chain has degree " +
                                          std::to_string(tree.degree(cur))};
            VertexSet onward = tree.neighbors(cur);
            if (prev != 0)
                onward.erase(prev);
            prev = cur;
            cur = onward.min();
            chain.push_back(cur);
        }
        const VertexSet members = VertexSet::of(chain);
        if (members.intersects(covered))
            return {std::nullopt, "pendant chains from different leaves overlap at " +
                                      (members & covered).to_string()};
        covered |= members;
        std::reverse(chain.begin(), chain.end());
        w.base_vertices.insert(chain.front());
        w.pendant_paths.push_back(std::move(chain));
    }
    if (covered != tree.vertices())
        return {std::nullopt, "pendant chains miss " + (tree.vertices() - covered).to_string()};
    std::sort(w.pendant_paths.begin(), w.pendant_paths.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return {w, ""};
}

struct CmClassification
{
    bool is_cm = false;
    std::optional<SuspensionWitness> witness;
    std::string basis;
};

/**
 * Cohen-Macaulay classification of the path ideal of length ell of a tree:
 * CM exactly when the tree is a suspension of length ell.
 *
 * The zero ideal (no path of length ell) is reported as CM. When the ideal
 * is nonzero but some vertex lies on no path of length ell, the
 * classification does not apply and HypothesisViolated is thrown.
 */
inline CmClassification classify_cm_path_ideal(const Forest& tree, int ell)
{
    if (ell < 1)
        throw Error(ErrorCode::InvalidArgument, "path length must be positive");
    if (!tree.is_tree())
        throw Error(ErrorCode::NotConnected, "classification needs a tree");
    const Clutter paths = path_clutter(tree, ell);
    if (paths.empty())
        return {true, std::nullopt, "zero ideal"};
    if (paths.support() != tree.vertices())
        throw Error(ErrorCode::HypothesisViolated,
                    "vertices " + (tree.vertices() - paths.support()).to_string() + " lie on no path of length " +
                        std::to_string(ell));
    SuspensionResult s = is_suspension(tree, ell);
    if (s)
        return {true, std::move(s.witness), "suspension of length " + std::to_string(ell)};
    return {false, std::nullopt, "not a suspension: " + s.reason};
}

} // namespace pathideal
