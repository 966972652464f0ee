#include <gtest/gtest.h>

#include "pathideal/io.hpp"
#include "test_util.hpp"

using namespace pathideal;
using pathideal::io::json;

TEST(Io, ForestEdgeListRoundTrip)
{
    const Forest f = build_forest(6, {{1, 2}, {2, 3}, {2, 4}, {5, 6}});
    const std::string text = io::to_edge_list(f);
    EXPECT_EQ(text, "6\n1 2\n2 3\n2 4\n5 6\n");
    EXPECT_EQ(io::parse_forest(text), f);
    EXPECT_EQ(io::parse_forest("# comment\n\n3\n1 2\n  # another\n2 3\n"), make_spine(3));
}

TEST(Io, ForestJsonRoundTrip)
{
    const Forest f = make_star(5);
    const json j = io::to_json(f);
    EXPECT_EQ(j.dump(), R"({"edges":[[1,2],[1,3],[1,4],[1,5]],"n":5})");
    EXPECT_EQ(io::parse_forest(j.dump()), f);
    EXPECT_EQ(io::to_json(f.delete_vertex(3))["vertices"], json({1, 2, 4, 5}));
}

TEST(Io, ForestFormatErrors)
{
    EXPECT_EQ(code_of([] { io::parse_forest(""); }), ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::parse_forest("3\n1\n"); }), ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::parse_forest("3\n1 2 3\n"); }), ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::parse_forest("x\n"); }), ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::parse_forest(R"({"n": 3})"); }), ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::parse_forest(R"({"n": 3, "edges": [[1]]})"); }), ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::parse_forest(R"({"n": 3, "edges": [[1, 2], [2, 3], [3, 1]]})"); }),
              ErrorCode::CycleDetected);
    EXPECT_EQ(code_of([] { io::parse_forest("{ broken"); }), ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::read_forest("/nonexistent/forest.txt"); }), ErrorCode::FileFormat);
}

TEST(Io, ClutterJson)
{
    const Clutter c = io::clutter_from_json(json::parse(R"({"n": 4, "edges": [[1,2,3],[1,2,4],[1,3,4]]})"));
    EXPECT_EQ(c.edge_count(), 3);
    EXPECT_EQ(io::clutter_from_json(io::to_json(c)), c);
    const Clutter g = io::clutter_from_json(json::parse(R"({"n": 3, "generators": [[1,2,3],[1,2]]})"));
    EXPECT_EQ(g.edges(), (std::vector<VertexSet>{VertexSet{1, 2}}));
    EXPECT_EQ(code_of([] { io::clutter_from_json(json::parse(R"({"n": 3, "edges": [[1,1]]})")); }),
              ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::clutter_from_json(json::parse(R"({"n": 3, "edges": [[0]]})")); }),
              ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { io::clutter_from_json(json::parse(R"({"n": 3, "edges": [["a"]]})")); }),
              ErrorCode::FileFormat);
    EXPECT_EQ(code_of([] { io::clutter_from_json(json::parse(R"({"edges": []})")); }), ErrorCode::FileFormat);
}

TEST(Io, ComplexAndCycle)
{
    const SimplicialComplex delta =
        io::complex_from_json(json::parse(R"({"n": 4, "facets": [[1,2,3],[1,2,4],[1,3,4]]})"));
    EXPECT_EQ(io::complex_from_json(io::to_json(delta)), delta);
    const SpecialCycle cycle{{2, 3, 4}, {VertexSet{1, 2, 3}, VertexSet{1, 3, 4}, VertexSet{1, 2, 4}}};
    EXPECT_EQ(io::to_json(cycle).dump(), "[2,[1,2,3],3,[1,3,4],4,[1,2,4],2]");
}

TEST(Io, Reports)
{
    const json spine = io::to_json(spine_report(18, 6));
    EXPECT_EQ(spine["depth"], 14);
    EXPECT_EQ(spine["params"]["b"], 1);
    EXPECT_EQ(spine["params"]["c"], 3);
    const json err = io::error_json(Error(ErrorCode::CapExceeded, "too big"));
    EXPECT_EQ(err["error"], "CapExceeded");
    const json h = io::to_json(HomologyProfile{{0, 0, 1}});
    EXPECT_EQ(h["ranks"], json({0, 0, 1}));
}

TEST(Io, DotOutput)
{
    EXPECT_EQ(io::to_dot(make_spine(2)), "graph forest {\n  1;\n  2;\n  1 -- 2;\n}\n");
}
