#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "pathideal/clutter.hpp"
#include "pathideal/error.hpp"
#include "pathideal/field.hpp"
#include "pathideal/homology.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

inline constexpr int kDefaultOracleCap = 16;

struct OracleOptions
{
    FieldChoice field = FieldChoice::gf2();
    /// Largest vertex count accepted (2^n induced subcomplexes).
    int vertex_cap = kDefaultOracleCap;
    /// Run the Reisner link test alongside Hochster and require agreement.
    bool reisner_check = true;
};

/// Invariants of R/I with R the polynomial ring on the clutter's vertices.
struct DepthReport
{
    int n = 0;
    int depth = 0;
    int projective_dimension = 0;
    int height = 0;
    int krull_dim = 0;
    bool is_cm = false;
};

namespace detail {

inline void require_cap(const Clutter& c, int cap)
{
    if (c.vertices().size() > cap)
        throw Error(ErrorCode::CapExceeded,
                    std::to_string(c.vertices().size()) + " vertices exceed oracle cap " + std::to_string(cap));
}

} // namespace detail

/**
 * pd(R/I) by Hochster's formula: the largest |W| - 1 - j over vertex sets W
 * with nonzero reduced H_j of the independence complex restricted to W.
 *
 * W is skipped when some vertex of W lies in no edge inside W (the
 * restriction is a cone, hence acyclic), or when |W| - d + 1 cannot beat
 * the current maximum, d being the smallest edge size inside W.
 */
inline int projective_dimension(const Clutter& c, FieldChoice field = FieldChoice::gf2(),
                                int vertex_cap = kDefaultOracleCap)
{
    detail::require_cap(c, vertex_cap);
    int best = 0;
    for_each_subset(c.vertices(), [&](VertexSet w) {
        if (w.empty())
            return;
        VertexSet covered;
        int smallest = kMaxVertices + 1;
        for (VertexSet e : c.edges())
            if (e.subset_of(w)) {
                covered |= e;
                smallest = std::min(smallest, e.size());
            }
        if (covered != w)
            return;
        if (w.size() - smallest + 1 <= best)
            return;
        const auto j = homology_of_faces(independent_faces(c, w), field).lowest_nonzero();
        if (j)
            best = std::max(best, w.size() - 1 - *j);
    });
    return best;
}

/**
 * Reisner's criterion on the independence complex: every link has vanishing
 * reduced homology below its top dimension.
 */
inline bool reisner_is_cm(const Clutter& c, FieldChoice field = FieldChoice::gf2(),
                          int vertex_cap = kDefaultOracleCap)
{
    detail::require_cap(c, vertex_cap);
    const FaceTable all = independent_faces(c, c.vertices());
    std::vector<VertexSet> faces;
    for (const auto& level : all.by_dim)
        faces.insert(faces.end(), level.begin(), level.end());
    const std::unordered_set<VertexSet, VertexSetHash> lookup(faces.begin(), faces.end());

    for (VertexSet sigma : faces) {
        FaceTable link;
        for (VertexSet tau : faces)
            if (!tau.intersects(sigma) && lookup.count(tau | sigma) != 0)
                link.add(tau);
        link.finish();
        const HomologyProfile h = homology_of_faces(link, field);
        const int top = static_cast<int>(link.by_dim.size()) - 2;
        for (int d = -1; d < top; ++d)
            if (h.rank(d) != 0)
                return false;
    }
    return true;
}

/// depth = n - pd, Krull dimension = n - height; CM iff the two agree.
inline DepthReport depth(const Clutter& c, const OracleOptions& options = {})
{
    DepthReport r;
    r.n = c.vertices().size();
    r.projective_dimension = projective_dimension(c, options.field, options.vertex_cap);
    r.depth = r.n - r.projective_dimension;
    r.height = min_vertex_cover(c).alpha0;
    r.krull_dim = r.n - r.height;
    r.is_cm = r.depth == r.krull_dim;
    if (r.depth > r.krull_dim)
        throw Error(ErrorCode::InternalContradiction, "depth exceeds Krull dimension");
    if (options.reisner_check && reisner_is_cm(c, options.field, options.vertex_cap) != r.is_cm)
        throw Error(ErrorCode::InternalContradiction, "Reisner and Hochster disagree on Cohen-Macaulayness");
    return r;
}

inline DepthReport depth(const Clutter& c, FieldChoice field)
{
    OracleOptions options;
    options.field = field;
    return depth(c, options);
}

} // namespace pathideal
