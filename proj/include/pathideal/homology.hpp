#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pathideal/clutter.hpp"
#include "pathideal/error.hpp"
#include "pathideal/field.hpp"
#include "pathideal/simplicial.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

/// Reduced homology ranks; ranks[0] is dimension -1.
struct HomologyProfile
{
    std::vector<int> ranks;

    int rank(int dim) const
    {
        const int i = dim + 1;
        return i >= 0 && i < static_cast<int>(ranks.size()) ? ranks[static_cast<std::size_t>(i)] : 0;
    }
    int top_dimension() const { return static_cast<int>(ranks.size()) - 2; }
    bool acyclic() const
    {
        return std::all_of(ranks.begin(), ranks.end(), [](int r) { return r == 0; });
    }
    /// Smallest dimension with nonzero rank, if any.
    std::optional<int> lowest_nonzero() const
    {
        for (std::size_t i = 0; i < ranks.size(); ++i)
            if (ranks[i] != 0)
                return static_cast<int>(i) - 1;
        return std::nullopt;
    }

    bool operator==(const HomologyProfile&) const = default;
};

/// Faces grouped by dimension: by_dim[d + 1] holds the d-faces, sorted.
struct FaceTable
{
    std::vector<std::vector<VertexSet>> by_dim;

    void add(VertexSet face)
    {
        const std::size_t slot = static_cast<std::size_t>(face.size());
        if (by_dim.size() <= slot)
            by_dim.resize(slot + 1);
        by_dim[slot].push_back(face);
    }
    void finish()
    {
        for (auto& faces : by_dim)
            std::sort(faces.begin(), faces.end());
    }
    std::size_t total() const
    {
        std::size_t t = 0;
        for (const auto& faces : by_dim)
            t += faces.size();
        return t;
    }
};

inline FaceTable faces_of(const SimplicialComplex& delta)
{
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (VertexSet f : delta.facets())
        for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
    FaceTable table;
    for (VertexSet s : seen)
        table.add(s);
    table.finish();
    return table;
}

/// Faces of the independence complex of `c` restricted to `within`,
/// found by depth-first growth in vertex order.
inline FaceTable independent_faces(const Clutter& c, VertexSet within)
{
    std::vector<VertexSet> inside;
    for (VertexSet e : c.edges())
        if (e.subset_of(within))
            inside.push_back(e);
    const std::vector<int> order = within.to_vector();
    FaceTable table;
    auto grow = [&](auto& self, std::size_t pos, VertexSet face) -> void {
        table.add(face);
        for (std::size_t i = pos; i < order.size(); ++i) {
            VertexSet next = face;
            next.insert(order[i]);
            const bool independent = std::none_of(inside.begin(), inside.end(), [&](VertexSet e) {
                return e.contains(order[i]) && e.subset_of(next);
            });
            if (independent)
                self(self, i + 1, next);
        }
    };
    grow(grow, 0, VertexSet{});
    table.finish();
    return table;
}

namespace detail {

using FaceIndex = std::unordered_map<std::uint64_t, int>;

inline FaceIndex index_faces(const std::vector<VertexSet>& faces)
{
    FaceIndex idx;
    idx.reserve(faces.size() * 2);
    for (std::size_t i = 0; i < faces.size(); ++i)
        idx.emplace(faces[i].bits(), static_cast<int>(i));
    return idx;
}

/// Ranks of every boundary map, computed from the top dimension down with
/// low-pivot column reduction. Columns whose face was a pivot row of the
/// map one dimension up reduce to zero and are skipped.
/// Returns rank[d + 1] = rank of the boundary leaving d-faces.
template <class Reducer>
std::vector<int> boundary_ranks(const FaceTable& table, Reducer& reducer)
{
    const int levels = static_cast<int>(table.by_dim.size());
    std::vector<int> rank(static_cast<std::size_t>(levels) + 1, 0);
    std::vector<bool> cleared;
    for (int slot = levels - 1; slot >= 1; --slot) {
        const auto& cols = table.by_dim[static_cast<std::size_t>(slot)];
        const auto& rows = table.by_dim[static_cast<std::size_t>(slot - 1)];
        const FaceIndex row_index = index_faces(rows);
        std::vector<bool> pivot_rows(rows.size(), false);
        rank[static_cast<std::size_t>(slot)] =
            reducer.reduce(cols, row_index, cleared, pivot_rows);
        cleared = std::move(pivot_rows);
    }
    return rank;
}

/// Column reduction over GF(2); columns are sorted row lists.
struct Gf2Reducer
{
    int reduce(const std::vector<VertexSet>& cols, const FaceIndex& row_index, const std::vector<bool>& cleared,
               std::vector<bool>& pivot_rows)
    {
        std::unordered_map<int, std::vector<int>> by_low;
        std::vector<int> col;
        std::vector<int> merged;
        int rank = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (!cleared.empty() && cleared[j])
                continue;
            col.clear();
            for (int v : cols[j]) {
                VertexSet facet = cols[j];
                facet.erase(v);
                col.push_back(row_index.at(facet.bits()));
            }
            std::sort(col.begin(), col.end());
            while (!col.empty()) {
                const auto it = by_low.find(col.back());
                if (it == by_low.end())
                    break;
                merged.clear();
                std::set_symmetric_difference(col.begin(), col.end(), it->second.begin(), it->second.end(),
                                              std::back_inserter(merged));
                col.swap(merged);
            }
            if (!col.empty()) {
                pivot_rows[static_cast<std::size_t>(col.back())] = true;
                by_low.emplace(col.back(), col);
                ++rank;
            }
        }
        return rank;
    }
};

/// Column reduction over an arbitrary exact field.
template <class Ops>
struct FieldReducer
{
    using T = typename Ops::value_type;
    using Column = std::vector<std::pair<int, T>>;
    Ops ops;

    int reduce(const std::vector<VertexSet>& cols, const FaceIndex& row_index, const std::vector<bool>& cleared,
               std::vector<bool>& pivot_rows)
    {
        std::unordered_map<int, Column> by_low;
        int rank = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (!cleared.empty() && cleared[j])
                continue;
            Column col;
            int sign = 1;
            for (int v : cols[j]) {
                VertexSet facet = cols[j];
                facet.erase(v);
                col.emplace_back(row_index.at(facet.bits()), ops.from_int(sign));
                sign = -sign;
            }
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            while (!col.empty()) {
                const auto it = by_low.find(col.back().first);
                if (it == by_low.end())
                    break;
                const Column& piv = it->second;
                const T factor = ops.mul(col.back().second, ops.inv(piv.back().second));
                col = axpy(col, piv, factor);
            }
            if (!col.empty()) {
                pivot_rows[static_cast<std::size_t>(col.back().first)] = true;
                by_low.emplace(col.back().first, std::move(col));
                ++rank;
            }
        }
        return rank;
    }

    /// col - factor * piv, dropping zeros.
    Column axpy(const Column& col, const Column& piv, const T& factor) const
    {
        Column out;
        out.reserve(col.size() + piv.size());
        std::size_t a = 0;
        std::size_t b = 0;
        while (a < col.size() || b < piv.size()) {
            if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
                out.push_back(col[a++]);
            } else if (a == col.size() || piv[b].first < col[a].first) {
                out.emplace_back(piv[b].first, ops.sub(ops.from_int(0), ops.mul(factor, piv[b].second)));
                ++b;
            } else {
                T v = ops.sub(col[a].second, ops.mul(factor, piv[b].second));
                if (!ops.is_zero(v))
                    out.emplace_back(col[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        return out;
    }
};

} // namespace detail

/// Reduced homology ranks of the complex with the given faces (the empty
/// face included) over `field`.
inline HomologyProfile homology_of_faces(const FaceTable& table, FieldChoice field)
{
    std::vector<int> boundary;
    switch (field.kind) {
    case FieldKind::GF2: {
        detail::Gf2Reducer r;
        boundary = detail::boundary_ranks(table, r);
        break;
    }
    case FieldKind::GFp: {
        detail::FieldReducer<ModP> r{ModP{field.p}};
        boundary = detail::boundary_ranks(table, r);
        break;
    }
    case FieldKind::Rationals: {
        detail::FieldReducer<RationalOps> r{};
        boundary = detail::boundary_ranks(table, r);
        break;
    }
    }
    HomologyProfile h;
    const std::size_t levels = table.by_dim.size();
    h.ranks.resize(levels);
    for (std::size_t slot = 0; slot < levels; ++slot) {
        const int leaving = boundary[slot];
        const int arriving = slot + 1 < boundary.size() ? boundary[slot + 1] : 0;
        h.ranks[slot] = static_cast<int>(table.by_dim[slot].size()) - leaving - arriving;
    }
    while (!h.ranks.empty() && table.by_dim[h.ranks.size() - 1].empty())
        h.ranks.pop_back();
    return h;
}

inline constexpr int kDefaultHomologyCap = 20;

/// Reduced homology of a complex. The void complex has no ranks at all;
/// {∅} has rank 1 in dimension -1.
inline HomologyProfile reduced_homology(const SimplicialComplex& delta, FieldChoice field = FieldChoice::gf2(),
                                        int vertex_cap = kDefaultHomologyCap)
{
    if (delta.vertices().size() > vertex_cap)
        throw Error(ErrorCode::CapExceeded, std::to_string(delta.vertices().size()) + " vertices exceed cap " +
                                                std::to_string(vertex_cap));
    if (delta.facets().empty())
        return {};
    return homology_of_faces(faces_of(delta), field);
}

} // namespace pathideal
