#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathideal/generators.hpp"
#include "pathideal/suspension.hpp"
#include "test_util.hpp"

using namespace pathideal;

TEST(Suspension, SpineOfSixIsSuspensionOfEdge)
{
    const SuspensionResult r = is_suspension(make_spine(6), 2);
    ASSERT_TRUE(r);
    EXPECT_EQ(r.witness->base_vertices, (VertexSet{3, 4}));
    EXPECT_EQ(r.witness->pendant_paths, (std::vector<std::vector<int>>{{3, 2, 1}, {4, 5, 6}}));
    EXPECT_TRUE(is_valid_suspension_witness(make_spine(6), 2, *r.witness));
}

TEST(Suspension, Negatives)
{
    EXPECT_FALSE(is_suspension(make_spine(5), 2));
    EXPECT_FALSE(is_suspension(make_star(4), 1));
    EXPECT_TRUE(is_suspension(make_spine(3), 2));
    EXPECT_EQ(code_of([] { is_suspension(build_forest(4, {{1, 2}}), 1); }), ErrorCode::NotConnected);
    EXPECT_EQ(code_of([] { is_suspension(make_spine(4), 0); }), ErrorCode::InvalidArgument);
}

TEST(Suspension, BuildThenDetect)
{
    const Forest base = make_star(4);
    const Forest t = build_suspension(base, 2);
    EXPECT_EQ(t.order(), 12);
    EXPECT_TRUE(t.is_tree());
    const SuspensionResult r = is_suspension(t, 2);
    ASSERT_TRUE(r);
    EXPECT_EQ(r.witness->base_vertices, base.vertices());
    EXPECT_EQ(r.witness->pendant_paths.front(), (std::vector<int>{1, 5, 6}));
}

TEST(Suspension, ClassificationOfPathIdeals)
{
    EXPECT_TRUE(classify_cm_path_ideal(make_spine(6), 2).is_cm);
    EXPECT_FALSE(classify_cm_path_ideal(make_spine(5), 2).is_cm);
    const CmClassification zero = classify_cm_path_ideal(make_star(4), 3);
    EXPECT_TRUE(zero.is_cm);
    EXPECT_EQ(zero.basis, "zero ideal");
    // pendant vertex 6 at the centre of 1-2-3-4-5 lies on no path of length 4
    EXPECT_EQ(code_of([] { classify_cm_path_ideal(build_forest(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}), 4); }),
              ErrorCode::HypothesisViolated);
}

TEST(Suspension, AgreesWithExhaustivePartitionSearch)
{
    for (int n = 1; n <= 11; ++n)
        for (const Forest& t : enumerate_unlabeled_trees(n))
            for (int ell = 1; ell <= 4; ++ell) {
                const SuspensionResult r = is_suspension(t, ell);
                EXPECT_EQ(static_cast<bool>(r), oracle::is_suspension(t, ell)) << "n=" << n << " ell=" << ell;
                if (r) {
                    EXPECT_TRUE(is_valid_suspension_witness(t, ell, *r.witness));
                }
            }
}

TEST(Suspension, RandomSuspensionsRoundTrip)
{
    Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const int ell = rng.between(1, 3);
        const Forest base = random_tree(rng.between(1, 12 / (ell + 1) + 1), rng);
        const Forest t = build_suspension(base, ell);
        const SuspensionResult r = is_suspension(t, ell);
        ASSERT_TRUE(r);
        EXPECT_TRUE(is_valid_suspension_witness(t, ell, *r.witness));
        // a lone base vertex makes the tree a bare path, and either end can serve as base
        if (base.order() > 1) {
            EXPECT_EQ(r.witness->base_vertices, base.vertices());
        }
    }
}
