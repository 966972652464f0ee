#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathideal/generators.hpp"
#include "pathideal/monomial_ideal.hpp"
#include "test_util.hpp"

using namespace pathideal;

TEST(MonomialIdeal, ColonAndSum)
{
    const MonomialIdeal i(4, {VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 4}});
    EXPECT_EQ(i.colon(VertexSet{2}).to_string(), "(x1, x3)");
    EXPECT_EQ(i.add(VertexSet{2}).to_string(), "(x2, x3x4)");
    EXPECT_TRUE(i.colon(VertexSet{1, 2}).is_unit());
    EXPECT_EQ(MonomialIdeal::zero(3).to_string(), "(0)");
    EXPECT_EQ(MonomialIdeal::unit(3).to_string(), "(1)");
    EXPECT_TRUE(i.sum(MonomialIdeal(4, {VertexSet{2}})).same_ideal(i.add(VertexSet{2})));
}

TEST(MonomialIdeal, RejectsBadMonomials)
{
    const MonomialIdeal i(3, {VertexSet{1, 2}});
    EXPECT_EQ(code_of([&] { i.colon(VertexSet{}); }), ErrorCode::EmptyMonomial);
    EXPECT_EQ(code_of([&] { i.add(VertexSet{4}); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { MonomialIdeal(2, {VertexSet{3}}); }), ErrorCode::VertexOutOfRange);
}

TEST(MonomialIdeal, MinimalGenerators)
{
    const MonomialIdeal i(3, {VertexSet{1, 2, 3}, VertexSet{1, 2}, VertexSet{2}});
    EXPECT_EQ(i.minimal_generators().generators(), (std::vector<VertexSet>{VertexSet{2}}));
    EXPECT_TRUE(i.same_ideal(MonomialIdeal(3, {VertexSet{2}})));
}

// m' lies in (I : m) iff m m' lies in I; (I, m) holds exactly I and the multiples of m.
TEST(MonomialIdeal, ColonAndAddMembershipMatchesDefinition)
{
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.between(2, 7);
        std::vector<VertexSet> gens;
        for (int k = rng.between(0, 5); k > 0; --k) {
            VertexSet s;
            for (int v = 1; v <= n; ++v)
                if (rng.chance(2, 5))
                    s.insert(v);
            if (!s.empty())
                gens.push_back(s);
        }
        const MonomialIdeal i(n, gens);
        VertexSet m;
        while (m.empty())
            for (int v = 1; v <= n; ++v)
                if (rng.chance(3, 10))
                    m.insert(v);
        const MonomialIdeal q = i.colon(m);
        const MonomialIdeal a = i.add(m);
        for (VertexSet x : oracle::all_subsets(VertexSet::range(n))) {
            EXPECT_EQ(q.contains(x), i.contains(x | m));
            EXPECT_EQ(a.contains(x), i.contains(x) || m.subset_of(x));
        }
    }
}
