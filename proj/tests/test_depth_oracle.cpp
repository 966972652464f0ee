#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathideal/depth_oracle.hpp"
#include "pathideal/generators.hpp"
#include "test_util.hpp"

using namespace pathideal;

TEST(DepthOracle, ZeroIdeal)
{
    const DepthReport r = depth(Clutter(4, {}));
    EXPECT_EQ(r.projective_dimension, 0);
    EXPECT_EQ(r.depth, 4);
    EXPECT_TRUE(r.is_cm);
}

TEST(DepthOracle, SingleMonomial)
{
    const DepthReport r = depth(Clutter(2, {VertexSet{1, 2}}));
    EXPECT_EQ(r.projective_dimension, 1);
    EXPECT_EQ(r.depth, 1);
    EXPECT_TRUE(r.is_cm);
}

TEST(DepthOracle, SpinePathIdeals)
{
    const DepthReport s5 = depth(path_clutter(make_spine(5), 2));
    EXPECT_EQ(s5.projective_dimension, 2);
    EXPECT_EQ(s5.depth, 3);
    EXPECT_EQ(s5.krull_dim, 4);
    EXPECT_FALSE(s5.is_cm);
    EXPECT_FALSE(reisner_is_cm(path_clutter(make_spine(5), 2)));

    const DepthReport s6 = depth(path_clutter(make_spine(6), 2));
    EXPECT_TRUE(s6.is_cm);
    EXPECT_EQ(s6.depth, 4);
    EXPECT_TRUE(reisner_is_cm(path_clutter(make_spine(6), 2)));
}

TEST(DepthOracle, SpineOfEighteenAtRaisedCap)
{
    OracleOptions options;
    options.vertex_cap = 18;
    options.reisner_check = false;
    EXPECT_EQ(depth(path_clutter(make_spine(18), 6), options).depth, 14);
}

TEST(DepthOracle, CapExceeded)
{
    EXPECT_EQ(code_of([] { depth(path_clutter(make_spine(17), 2)); }), ErrorCode::CapExceeded);
}

TEST(DepthOracle, IsolatedVertexAddsOne)
{
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const Forest f = random_forest(rng.between(2, 9), rng);
        const Clutter c = random_subtree_clutter(f, rng, rng.between(1, 5));
        const Clutter bigger(c.n_vertices() + 1, c.edges());
        EXPECT_EQ(depth(bigger).depth, depth(c).depth + 1);
    }
}

TEST(DepthOracle, AuslanderBuchsbaumAndFieldAgreement)
{
    Rng rng(111);
    for (int trial = 0; trial < 80; ++trial) {
        const Forest f = random_forest(rng.between(1, 10), rng);
        const Clutter c = random_subtree_clutter(f, rng, rng.between(0, 6));
        const DepthReport gf2 = depth(c, FieldChoice::gf2());
        const DepthReport q = depth(c, FieldChoice::rationals());
        EXPECT_EQ(gf2.depth + gf2.projective_dimension, gf2.n);
        EXPECT_EQ(gf2.krull_dim, gf2.n - gf2.height);
        EXPECT_LE(gf2.depth, gf2.krull_dim);
        EXPECT_EQ(gf2.depth, q.depth);
        EXPECT_EQ(gf2.is_cm, q.is_cm);
    }
}

TEST(DepthOracle, PrunedEnumerationMatchesUnprunedHochster)
{
    Rng rng(121);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.between(1, 7);
        std::vector<VertexSet> sets;
        for (int k = rng.between(0, 5); k > 0; --k) {
            VertexSet s;
            for (int v = 1; v <= n; ++v)
                if (rng.chance(9, 20))
                    s.insert(v);
            if (!s.empty())
                sets.push_back(s);
        }
        const Clutter c = Clutter::minimal(n, sets);
        EXPECT_EQ(projective_dimension(c), oracle::projective_dimension(c)) << "trial " << trial;
        EXPECT_EQ(projective_dimension(c, FieldChoice::rationals()), oracle::projective_dimension(c, true));
    }
}
