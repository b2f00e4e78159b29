#include <gtest/gtest.h>

#include <set>

#include "shapes.hpp"
#include "z5/families.hpp"

using namespace z5;
using namespace z5::test;

TEST(Descriptor, PrintParseRoundTrip) {
    for (const char* text : {"(broken 3)", "(wheel 5)", "(glue (broken 4) (wheel 3))", "(insert (wheel 5) t1 j=1)",
                             "(insert (glue (wheel 4) (broken 3)) t2 j=0)"}) {
        EXPECT_EQ(to_string(parse_descriptor(text)), text);
    }
}

TEST(Descriptor, MalformedTextRejected) {
    for (const char* text : {"", "(broken)", "(wheel 2)", "(broken 3", "(insert (wheel 5) 1 j=1)", "(circle 4)"})
        EXPECT_THROW(parse_descriptor(text), std::invalid_argument) << text;
}

TEST(Descriptor, Sizes) {
    EXPECT_EQ(Descriptor::broken(6).vertex_count(), 6);
    EXPECT_EQ(Descriptor::wheel(5).vertex_count(), 6);
    EXPECT_EQ(Descriptor::wheel(5).outer_length(), 5);
    // Gluing shares v1 and one more vertex.
    const Descriptor g = Descriptor::glue(Descriptor::wheel(4), Descriptor::broken(3));
    EXPECT_EQ(g.vertex_count(), 5 + 3 - 2);
    EXPECT_EQ(g.outer_length(), 4 + 3 - 2);
}

TEST(Build, BrokenWheelIsAFan) {
    const Built b = build(Descriptor::broken(5));
    EXPECT_TRUE(validate(b.graph).ok());
    EXPECT_TRUE(embedded_isomorphic(b.graph, broken_wheel(5)));
    EXPECT_EQ(b.path, (PrincipalPath{4, 0, 1}));
}

TEST(Build, WheelMatchesHandMade) {
    const Built b = build(Descriptor::wheel(6));
    EXPECT_TRUE(validate(b.graph).ok());
    EXPECT_TRUE(embedded_isomorphic(b.graph, wheel(6)));
}

TEST(Build, InsertIntoWheel) {
    const Built b = build(parse_descriptor("(insert (wheel 5) t1 j=1)"));
    EXPECT_TRUE(validate(b.graph).ok());
    EXPECT_EQ(b.graph.vertex_count(), 8);
    EXPECT_EQ(b.graph.outer_length(), 6);
    EXPECT_TRUE(facial_triangle_property(b.graph));
}

TEST(Build, InsertNeedsInteriorApex) {
    // Every face of a broken wheel has its apex v1 on the outer cycle.
    EXPECT_THROW(build(Descriptor::insert(Descriptor::broken(5), 2, 1)), std::invalid_argument);
    EXPECT_THROW(build(Descriptor::insert(Descriptor::wheel(5), 0, 1)), std::invalid_argument);
    EXPECT_THROW(build(Descriptor::insert(Descriptor::wheel(5), 4, 1)), std::invalid_argument);
}

TEST(Build, GlueOfTrianglesIsBrokenWheel) {
    const Built b = build(Descriptor::glue(Descriptor::broken(3), Descriptor::broken(3)));
    EXPECT_TRUE(embedded_isomorphic(b.graph, broken_wheel(4)));
}

TEST(Recognize, KnownShapes) {
    EXPECT_EQ(recognize_generalized_multi_wheel(triangle()), Descriptor::broken(3));
    EXPECT_EQ(recognize_generalized_multi_wheel(wheel(5)), Descriptor::wheel(5));
    EXPECT_EQ(recognize_generalized_multi_wheel(broken_wheel(6)), Descriptor::broken(6));
    EXPECT_TRUE(is_multi_wheel(wheel(4)));
    EXPECT_TRUE(is_multi_wheel(k4()));
}

TEST(Recognize, BrokenWheelsAreNeverMultiWheels) {
    for (int k = 3; k <= 9; ++k) {
        EXPECT_TRUE(is_generalized_multi_wheel(broken_wheel(k)));
        EXPECT_FALSE(is_multi_wheel(broken_wheel(k)));
    }
}

TEST(Recognize, IcosahedronMinusVertexRejected) {
    const PlaneGraph g = icosahedron_minus_vertex();
    ASSERT_TRUE(validate(g).ok());
    // The bottom faces avoid the outer cycle entirely.
    EXPECT_FALSE(facial_triangle_property(g));
    for (int r = 0; r < 5; ++r) {
        const Vertex v1 = static_cast<Vertex>(r);
        const PrincipalPath p{static_cast<Vertex>((r + 4) % 5), v1, static_cast<Vertex>((r + 1) % 5)};
        EXPECT_FALSE(recognize_generalized_multi_wheel(g, p).has_value());
    }
}

TEST(Recognize, OctahedronRejected) {
    EXPECT_FALSE(is_generalized_multi_wheel(octahedron()));
}

TEST(Recognize, WrongPrincipalPathRejected) {
    const PlaneGraph g = broken_wheel(5);
    // Counter-clockwise order is not a principal path.
    EXPECT_FALSE(recognize_generalized_multi_wheel(g, PrincipalPath{1, 0, 4}).has_value());
    // The fan centre has to be the major vertex.
    EXPECT_FALSE(recognize_generalized_multi_wheel(g, PrincipalPath{1, 2, 3}).has_value());
}

TEST(Recognize, RoundTripOnEnumeratedMembers) {
    for (const Descriptor& d : enumerate_family(8)) {
        const Built b = build(d);
        const auto back = recognize_generalized_multi_wheel(b.graph);
        ASSERT_TRUE(back.has_value()) << to_string(d);
        EXPECT_TRUE(embedded_isomorphic(build(*back).graph, b.graph)) << to_string(d);
        EXPECT_TRUE(facial_triangle_property(b.graph)) << to_string(d);
    }
}

TEST(Enumerate, SmallestMembers) {
    const auto four = enumerate_family(4);
    ASSERT_EQ(four.size(), 3u);
    EXPECT_EQ(four[0], Descriptor::broken(3));
    std::set<std::string> rest{to_string(four[1]), to_string(four[2])};
    EXPECT_EQ(rest, (std::set<std::string>{"(broken 4)", "(wheel 3)"}));
}

TEST(Enumerate, MembersAreDistinctAndSorted) {
    const auto all = enumerate_family(9);
    std::set<std::vector<int>> codes;
    int last = 0;
    for (const Descriptor& d : all) {
        EXPECT_GE(d.vertex_count(), last);
        last = d.vertex_count();
        EXPECT_TRUE(codes.insert(canonical_code(build(d).graph)).second) << to_string(d);
    }
}

TEST(Enumerate, MultiWheelsLagOneVertexBehind) {
    // As many multi-wheels on at most 8 vertices as generalized multi-wheels on at most 7.
    std::size_t multi = 0;
    for (const Descriptor& d : enumerate_family(8)) multi += is_multi_wheel(build(d).graph);
    EXPECT_EQ(multi, enumerate_family(7).size());
}

TEST(WheelString, TwoBrokenWheels) {
    const WheelString s = build_wheel_string({Descriptor::broken(4), Descriptor::broken(4)});
    EXPECT_EQ(s.graph.vertex_count(), 7);
    ASSERT_EQ(s.cuts.size(), 1u);
    ASSERT_EQ(s.clean.size(), 2u);
    ASSERT_EQ(s.majors.size(), 2u);
    // The cut is part 1's v2 and part 2's vk.
    EXPECT_EQ(s.embedding[0][1], s.cuts[0]);
    EXPECT_EQ(s.embedding[1][3], s.cuts[0]);
    EXPECT_EQ(s.clean[0], s.embedding[0][3]);
    EXPECT_EQ(s.clean[1], s.embedding[1][1]);
    EXPECT_EQ(s.graph.edge_count(), 2 * build(Descriptor::broken(4)).graph.graph().edge_count());
}

TEST(WheelString, EmptyRejected) { EXPECT_THROW(build_wheel_string({}), std::invalid_argument); }
