#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pathideal/generators.hpp"
#include "pathideal/simplicial.hpp"
#include "test_util.hpp"

using namespace pathideal;

namespace {

const SimplicialComplex kThreeTriangles(4, {VertexSet{1, 2, 3}, VertexSet{1, 2, 4}, VertexSet{1, 3, 4}});
const SimplicialComplex kChain(5, {VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5}});

std::vector<Edge> sorted_edges(const Forest& f)
{
    auto e = f.edges();
    std::sort(e.begin(), e.end());
    return e;
}

bool has_leaf_everywhere(const std::vector<VertexSet>& facets)
{
    const std::uint32_t m = static_cast<std::uint32_t>(facets.size());
    for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
        std::vector<VertexSet> sub;
        for (std::uint32_t i = 0; i < m; ++i)
            if ((mask >> i) & 1U)
                sub.push_back(facets[i]);
        if (!oracle::has_leaf(sub))
            return false;
    }
    return true;
}

} // namespace

TEST(Simplicial, ComplexValidation)
{
    EXPECT_EQ(code_of([] { SimplicialComplex(3, {VertexSet{1, 2}, VertexSet{1}}); }), ErrorCode::NotAntichain);
    EXPECT_EQ(code_of([] { SimplicialComplex(3, {VertexSet{1, 2}, VertexSet{1, 2}}); }), ErrorCode::DuplicateEdge);
    EXPECT_EQ(code_of([] { SimplicialComplex(2, {VertexSet{3}}); }), ErrorCode::VertexOutOfRange);
    const SimplicialComplex empty_face(3, {VertexSet{}});
    EXPECT_EQ(empty_face.dimension(), -1);
    EXPECT_EQ(SimplicialComplex(3, {}).dimension(), -2);
}

TEST(Simplicial, IndependenceComplexExamples)
{
    EXPECT_EQ(independence_complex(Clutter(2, {VertexSet{1, 2}})).facets(),
              (std::vector<VertexSet>{VertexSet{1}, VertexSet{2}}));
    EXPECT_EQ(independence_complex(Clutter(4, {})).facets(), (std::vector<VertexSet>{VertexSet::range(4)}));
    const Clutter p2s5 = path_clutter(make_spine(5), 2);
    EXPECT_EQ(independence_complex(p2s5).facets(), oracle::independence_facets(p2s5));
}

TEST(Simplicial, IndependenceFacetsAreCoverComplements)
{
    Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const Forest f = random_forest(rng.between(1, 10), rng);
        const Clutter c = random_subtree_clutter(f, rng, rng.between(0, 6));
        std::vector<VertexSet> complements;
        for (VertexSet cover : enumerate_minimal_covers(c))
            complements.push_back(c.vertices() - cover);
        std::sort(complements.begin(), complements.end());
        EXPECT_EQ(independence_complex(c).facets(), complements);
        EXPECT_EQ(independence_complex(c).facets(), oracle::independence_facets(c));
    }
}

TEST(Simplicial, Leaves)
{
    const auto two = find_leaf(SimplicialComplex(4, {VertexSet{1, 2, 3}, VertexSet{2, 3, 4}}));
    ASSERT_TRUE(two.has_value());
    EXPECT_EQ(two->facet, (VertexSet{1, 2, 3}));
    EXPECT_EQ(two->joint, (VertexSet{2, 3, 4}));
    const auto single = find_leaf(SimplicialComplex(5, {VertexSet::range(5)}));
    ASSERT_TRUE(single.has_value());
    EXPECT_EQ(single->facet, VertexSet::range(5));
    EXPECT_FALSE(single->joint.has_value());
    EXPECT_FALSE(find_leaf(kThreeTriangles).has_value());
    EXPECT_EQ(code_of([] { find_leaf(SimplicialComplex(3, {})); }), ErrorCode::EmptyComplex);
}

TEST(Simplicial, SimplicialTreeRecognition)
{
    EXPECT_TRUE(is_simplicial_tree(kChain));
    EXPECT_FALSE(is_simplicial_tree(kThreeTriangles));
    EXPECT_TRUE(is_simplicial_tree(SimplicialComplex(4, {VertexSet{1, 2, 3, 4}})));
    EXPECT_FALSE(is_simplicial_tree(SimplicialComplex(4, {VertexSet{1, 2}, VertexSet{3, 4}})));
    std::vector<VertexSet> many;
    for (int v = 1; v <= 17; ++v)
        many.push_back(VertexSet{v, v + 1});
    EXPECT_EQ(code_of([&] { is_simplicial_tree(SimplicialComplex(18, many)); }), ErrorCode::BudgetExceeded);
}

TEST(Simplicial, SpecialOddCycleOfThreeTriangles)
{
    const auto cycle = find_special_odd_cycle(kThreeTriangles);
    ASSERT_TRUE(cycle.has_value());
    EXPECT_EQ(cycle->length(), 3);
    EXPECT_TRUE(is_special_cycle(kThreeTriangles, *cycle));
    EXPECT_EQ(cycle->vertices, (std::vector<int>{2, 3, 4}));
    EXPECT_FALSE(find_special_odd_cycle(SimplicialComplex(4, {VertexSet{1, 2, 3}, VertexSet{2, 3, 4}})).has_value());
    EXPECT_FALSE(find_special_odd_cycle(kChain).has_value());
}

TEST(Simplicial, OneSkeleton)
{
    const Graph tri = one_skeleton(SimplicialComplex(3, {VertexSet{1, 2, 3}}));
    EXPECT_EQ(tri.edges, (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}}));
    const Graph path = one_skeleton(SimplicialComplex(3, {VertexSet{1, 2}, VertexSet{2, 3}}));
    EXPECT_EQ(path.edges, (std::vector<Edge>{{1, 2}, {2, 3}}));
    const Graph bowtie = one_skeleton(SimplicialComplex(5, {VertexSet{1, 2, 3}, VertexSet{3, 4, 5}}));
    EXPECT_EQ(bowtie.edges.size(), 6U);
}

TEST(Simplicial, GoodSpanningTreeExamples)
{
    const Forest star = good_spanning_tree(SimplicialComplex(4, {VertexSet{1, 2, 3, 4}}));
    EXPECT_EQ(sorted_edges(star), (std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}}));

    const SimplicialComplex bowtie(5, {VertexSet{1, 2, 3}, VertexSet{3, 4, 5}});
    const Forest t = good_spanning_tree(bowtie);
    EXPECT_EQ(sorted_edges(t), (std::vector<Edge>{{1, 3}, {2, 3}, {3, 4}, {3, 5}}));
    EXPECT_TRUE(is_good_spanning_tree(bowtie, t));
}

TEST(Simplicial, GoodSpanningTreeNeedsAnExchange)
{
    const SimplicialComplex delta(5, {VertexSet{1, 3, 4}, VertexSet{2, 3, 4, 5}});
    const GoodTreeTrace trace = good_spanning_tree_traced(delta);
    EXPECT_EQ(sorted_edges(trace.tree), (std::vector<Edge>{{1, 3}, {2, 4}, {2, 5}, {3, 4}}));
    ASSERT_EQ(trace.swaps.size(), 1U);
    EXPECT_LT(trace.swaps.front().edges_before, trace.swaps.front().edges_after);
    EXPECT_TRUE(is_good_spanning_tree(delta, trace.tree));
}

TEST(Simplicial, NotSimplicialTreeCarriesCycle)
{
    try {
        good_spanning_tree(kThreeTriangles);
        FAIL() << "expected NotSimplicialTree";
    } catch (const NotSimplicialTreeError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSimplicialTree);
        ASSERT_TRUE(e.cycle().has_value());
        EXPECT_TRUE(is_special_cycle(kThreeTriangles, *e.cycle()));
    }
    EXPECT_EQ(code_of([] { clutter_as_subtree_ideal(Clutter(4, kThreeTriangles.facets())); }),
              ErrorCode::NotSimplicialTree);
}

TEST(Simplicial, SubtreeRepresentation)
{
    const SubtreeRepresentation bowtie = clutter_as_subtree_ideal(Clutter(5, {VertexSet{1, 2, 3}, VertexSet{3, 4, 5}}));
    EXPECT_TRUE(bowtie.confirmed);
    EXPECT_TRUE(is_subtree_clutter(bowtie.tree, Clutter(5, {VertexSet{1, 2, 3}, VertexSet{3, 4, 5}})));
    const Clutter path(4, {VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 4}});
    const SubtreeRepresentation spine = clutter_as_subtree_ideal(path);
    EXPECT_TRUE(spine.confirmed);
    EXPECT_EQ(spine.tree, make_spine(4));
}

TEST(Simplicial, RecognitionAgreesWithLeafDefinition)
{
    Rng rng(71);
    int trees = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = rng.between(3, 7);
        std::vector<VertexSet> sets;
        for (int k = rng.between(1, 5); k > 0; --k) {
            VertexSet s;
            for (int v = 1; v <= n; ++v)
                if (rng.chance(1, 2))
                    s.insert(v);
            if (!s.empty())
                sets.push_back(s);
        }
        if (sets.empty())
            continue;
        const SimplicialComplex delta(n, minimal_sets(sets));
        const bool expected = has_leaf_everywhere(delta.facets()) && detail::facets_connected(delta.facets());
        EXPECT_EQ(is_simplicial_tree(delta), expected);
        if (expected) {
            ++trees;
            EXPECT_FALSE(find_special_odd_cycle(delta).has_value());
            EXPECT_TRUE(is_good_spanning_tree(delta, good_spanning_tree(delta)));
        }
    }
    EXPECT_GT(trees, 50);
}

TEST(Simplicial, RandomSimplicialTreesHaveGoodSpanningTrees)
{
    Rng rng(81);
    for (int trial = 0; trial < 150; ++trial) {
        const SimplicialComplex delta = random_simplicial_tree(rng);
        ASSERT_TRUE(is_simplicial_tree(delta));
        const GoodTreeTrace trace = good_spanning_tree_traced(delta);
        EXPECT_TRUE(is_good_spanning_tree(delta, trace.tree));
        for (const SwapStep& s : trace.swaps)
            EXPECT_LT(s.edges_before, s.edges_after);
    }
}
