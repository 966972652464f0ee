#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pathideal/clutter.hpp"
#include "pathideal/error.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

/**
 * A square-free monomial ideal in k[x_1..x_n], stored by the supports of a
 * generating set. Generators need not form an antichain until
 * minimal_generators() is applied.
 *
 * The zero ideal has no generators. The unit ideal is the ideal with the
 * empty support (the monomial 1) among its generators.
 */
class MonomialIdeal
{
public:
    MonomialIdeal() = default;
    MonomialIdeal(int n, std::vector<VertexSet> generators) : n_(n), generators_(std::move(generators))
    {
        for (VertexSet g : generators_)
            if (!g.subset_of(VertexSet::range(n)))
                throw Error(ErrorCode::VertexOutOfRange, "generator " + g.to_string());
    }

    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
    static MonomialIdeal unit(int n) { return MonomialIdeal(n, {VertexSet{}}); }
    static MonomialIdeal of(const Clutter& c) { return MonomialIdeal(c.n_vertices(), c.edges()); }

    int n_vertices() const { return n_; }
    const std::vector<VertexSet>& generators() const { return generators_; }

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const
    {
        return std::any_of(generators_.begin(), generators_.end(), [](VertexSet g) { return g.empty(); });
    }

    /// Membership of the square-free monomial with support m.
    bool contains(VertexSet m) const
    {
        return std::any_of(generators_.begin(), generators_.end(), [m](VertexSet g) { return g.subset_of(m); });
    }

    MonomialIdeal minimal_generators() const { return MonomialIdeal(n_, minimal_sets(generators_)); }

    /// (I : m) for a square-free monomial m; reduced.
    MonomialIdeal colon(VertexSet m) const
    {
        require_monomial(m);
        std::vector<VertexSet> out;
        out.reserve(generators_.size());
        for (VertexSet g : generators_)
            out.push_back(g - m);
        return MonomialIdeal(n_, minimal_sets(std::move(out)));
    }

    /// (I, m); reduced.
    MonomialIdeal add(VertexSet m) const
    {
        require_monomial(m);
        std::vector<VertexSet> out = generators_;
        out.push_back(m);
        return MonomialIdeal(n_, minimal_sets(std::move(out)));
    }

    /// I + J; reduced.
    MonomialIdeal sum(const MonomialIdeal& other) const
    {
        std::vector<VertexSet> out = generators_;
        out.insert(out.end(), other.generators_.begin(), other.generators_.end());
        return MonomialIdeal(std::max(n_, other.n_), minimal_sets(std::move(out)));
    }

    /// Ideal equality, compared on minimal generating sets.
    bool same_ideal(const MonomialIdeal& other) const
    {
        return n_ == other.n_ && minimal_sets(generators_) == minimal_sets(other.generators_);
    }

    std::string to_string() const
    {
        if (is_zero())
            return "(0)";
        std::string out = "(";
        bool first = true;
        for (VertexSet g : minimal_sets(generators_)) {
            if (!first)
                out += ", ";
            first = false;
            if (g.empty()) {
                out += "1";
                continue;
            }
            for (int v : g)
                out += "x" + std::to_string(v);
        }
        return out + ")";
    }

private:
    void require_monomial(VertexSet m) const
    {
        if (m.empty())
            throw Error(ErrorCode::EmptyMonomial, "monomial support must be nonempty");
        if (!m.subset_of(VertexSet::range(n_)))
            throw Error(ErrorCode::VertexOutOfRange, "monomial " + m.to_string());
    }

    int n_ = 0;
    std::vector<VertexSet> generators_;
};

inline MonomialIdeal ideal_colon(const MonomialIdeal& i, VertexSet m) { return i.colon(m); }
inline MonomialIdeal ideal_add(const MonomialIdeal& i, VertexSet m) { return i.add(m); }
inline MonomialIdeal minimal_generators(const MonomialIdeal& i) { return i.minimal_generators(); }

} // namespace pathideal
