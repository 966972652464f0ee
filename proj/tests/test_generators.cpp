#include <gtest/gtest.h>

#include "pathideal/generators.hpp"
#include "test_util.hpp"

using namespace pathideal;

TEST(Generators, UnlabeledTreeCounts)
{
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        const auto trees = enumerate_unlabeled_trees(n);
        EXPECT_EQ(trees.size(), expected[static_cast<std::size_t>(n - 1)]) << "n=" << n;
        for (std::size_t i = 0; i < trees.size(); ++i) {
            EXPECT_TRUE(trees[i].is_tree());
            for (std::size_t j = i + 1; j < trees.size(); ++j)
                EXPECT_FALSE(trees_isomorphic(trees[i], trees[j]));
        }
    }
    EXPECT_EQ(code_of([] { enumerate_unlabeled_trees(13); }), ErrorCode::InvalidArgument);
}

TEST(Generators, IsomorphismIgnoresLabels)
{
    const Forest a = build_forest(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}});
    const Forest b = build_forest(5, {{5, 4}, {4, 1}, {1, 2}, {1, 3}});
    const Forest c = make_spine(5);
    EXPECT_TRUE(trees_isomorphic(a, b));
    EXPECT_FALSE(trees_isomorphic(a, c));
    EXPECT_EQ(tree_centers(c), VertexSet{3});
    EXPECT_EQ(tree_centers(make_spine(4)), (VertexSet{2, 3}));
}

TEST(Generators, SameSeedSameOutput)
{
    Rng a(5);
    Rng b(5);
    for (int i = 0; i < 20; ++i) {
        const Forest fa = random_forest(10, a);
        const Forest fb = random_forest(10, b);
        EXPECT_EQ(fa, fb);
        EXPECT_EQ(random_subtree_clutter(fa, a, 4).edges(), random_subtree_clutter(fb, b, 4).edges());
    }
    Rng c(6);
    Rng d(7);
    int differ = 0;
    for (int i = 0; i < 20; ++i)
        differ += random_tree(12, c) == random_tree(12, d) ? 0 : 1;
    EXPECT_GT(differ, 0);
}

TEST(Generators, BoundedDraws)
{
    Rng rng(3);
    std::vector<int> hits(6, 0);
    for (int i = 0; i < 6000; ++i) {
        const int x = rng.between(-2, 3);
        ASSERT_GE(x, -2);
        ASSERT_LE(x, 3);
        ++hits[static_cast<std::size_t>(x + 2)];
    }
    for (int h : hits)
        EXPECT_GT(h, 800);
    EXPECT_EQ(code_of([&] { rng.below(0); }), ErrorCode::InvalidArgument);
}

TEST(Generators, RandomObjectsAreValid)
{
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Forest t = random_tree(rng.between(1, 20), rng);
        EXPECT_TRUE(t.is_tree());
        const Clutter c = random_subtree_clutter(t, rng, rng.between(1, 6));
        EXPECT_TRUE(is_subtree_clutter(t, c));
        for (VertexSet e : c.edges())
            EXPECT_LE(e.size(), 5);
        const SimplicialComplex delta = random_simplicial_tree(rng);
        EXPECT_LE(delta.facet_count(), 8);
        EXPECT_LE(delta.vertices().max(), 12);
    }
}
