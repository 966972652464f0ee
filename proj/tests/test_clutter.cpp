#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathideal/clutter.hpp"
#include "pathideal/generators.hpp"
#include "test_util.hpp"

using namespace pathideal;

namespace {

const Clutter kTriangles(4, {VertexSet{1, 2, 3}, VertexSet{1, 2, 4}, VertexSet{1, 3, 4}});

} // namespace

TEST(Clutter, ConstructionValidates)
{
    EXPECT_EQ(code_of([] { Clutter(3, {VertexSet{1, 2}, VertexSet{1, 2, 3}}); }), ErrorCode::NotAntichain);
    EXPECT_EQ(code_of([] { Clutter(3, {VertexSet{1, 2}, VertexSet{1, 2}}); }), ErrorCode::DuplicateEdge);
    EXPECT_EQ(code_of([] { Clutter(3, {VertexSet{}}); }), ErrorCode::EmptyEdge);
    EXPECT_EQ(code_of([] { Clutter(3, {VertexSet{3, 4}}); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { Clutter(0, {}); }), ErrorCode::VertexOutOfRange);
}

TEST(Clutter, MinimalKeepsInclusionMinimalSets)
{
    const Clutter c = Clutter::minimal(4, {VertexSet{1, 2, 3}, VertexSet{1, 2}, VertexSet{3, 4}, VertexSet{3, 4}});
    EXPECT_EQ(c.edges(), (std::vector<VertexSet>{VertexSet{1, 2}, VertexSet{3, 4}}));
}

TEST(Clutter, CoverNumbersOfTriangles)
{
    const CoverReport r = cover_report(kTriangles);
    EXPECT_EQ(r.alpha0, 1);
    EXPECT_EQ(r.beta1, 1);
    EXPECT_EQ(r.witness_cover, VertexSet{1});
    EXPECT_TRUE(is_koenig(kTriangles));
    EXPECT_EQ(enumerate_minimal_covers(kTriangles),
              (std::vector<VertexSet>{VertexSet{1}, VertexSet{2, 3}, VertexSet{2, 4}, VertexSet{3, 4}}));
    EXPECT_FALSE(is_unmixed(kTriangles));
}

TEST(Clutter, TriangleGraphIsNotKoenig)
{
    const Clutter c(3, {VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{1, 3}});
    EXPECT_EQ(min_vertex_cover(c).alpha0, 2);
    EXPECT_EQ(max_independent_edges(c).beta1, 1);
    EXPECT_FALSE(is_koenig(c));
    EXPECT_TRUE(is_unmixed(c));
}

TEST(Clutter, EmptyClutter)
{
    const Clutter c(3, {});
    EXPECT_EQ(cover_report(c).alpha0, 0);
    EXPECT_EQ(cover_report(c).beta1, 0);
    EXPECT_EQ(enumerate_minimal_covers(c), (std::vector<VertexSet>{VertexSet{}}));
}

TEST(Clutter, DeletionAndContraction)
{
    const Clutter c(3, {VertexSet{1, 2}, VertexSet{2, 3}});
    const Clutter contracted = c.contract_vertex(2);
    EXPECT_EQ(contracted.edges(), (std::vector<VertexSet>{VertexSet{1}, VertexSet{3}}));
    EXPECT_EQ(contracted.vertices(), (VertexSet{1, 3}));
    const Clutter deleted = c.delete_vertex(1);
    EXPECT_EQ(deleted.edges(), (std::vector<VertexSet>{VertexSet{2, 3}}));
    EXPECT_EQ(deleted.vertices(), (VertexSet{2, 3}));
    EXPECT_EQ(code_of([&] { contracted.contract_vertex(1); }), ErrorCode::EmptyEdge);
    EXPECT_EQ(code_of([&] { deleted.delete_vertex(1); }), ErrorCode::VertexOutOfRange);
}

TEST(Clutter, PathClutterOfStarIsSubtreeClutter)
{
    const Forest star = make_star(4);
    const Clutter c = path_clutter(star, 2);
    EXPECT_EQ(c.edge_count(), 3);
    EXPECT_TRUE(is_subtree_clutter(star, c));
    EXPECT_FALSE(is_subtree_clutter(star, Clutter(4, {VertexSet{2, 3}})));
}

TEST(Clutter, PerfectMatchingOfKoenigType)
{
    const Clutter spine6 = path_clutter(make_spine(6), 2);
    const auto m = find_perfect_matching_konig_type(spine6);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(*m, (std::vector<VertexSet>{VertexSet{1, 2, 3}, VertexSet{4, 5, 6}}));
    EXPECT_FALSE(has_perfect_matching_konig_type(path_clutter(make_spine(5), 2)));
}

TEST(Clutter, RandomCluttersAgreeWithBruteForce)
{
    Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.between(1, 9);
        std::vector<VertexSet> sets;
        const int count = rng.between(0, 7);
        for (int i = 0; i < count; ++i) {
            VertexSet s;
            for (int v = 1; v <= n; ++v)
                if (rng.chance(2, 5))
                    s.insert(v);
            if (!s.empty())
                sets.push_back(s);
        }
        const Clutter c = Clutter::minimal(n, sets);
        const CoverReport r = cover_report(c);
        EXPECT_EQ(r.alpha0, oracle::alpha0(c));
        EXPECT_EQ(r.beta1, oracle::beta1(c));
        EXPECT_TRUE(is_transversal(c, r.witness_cover));
        EXPECT_EQ(r.witness_cover.size(), r.alpha0);
        EXPECT_TRUE(is_pairwise_disjoint(r.witness_matching));
        EXPECT_EQ(static_cast<int>(r.witness_matching.size()), r.beta1);
        EXPECT_EQ(enumerate_minimal_covers(c), oracle::minimal_covers(c));
    }
}

TEST(Clutter, CoverBudget)
{
    std::vector<VertexSet> edges;
    for (int v = 1; v <= 30; ++v)
        edges.push_back(VertexSet{v});
    EXPECT_EQ(code_of([&] { enumerate_minimal_covers(Clutter(30, edges)); }), ErrorCode::BudgetExceeded);
}
