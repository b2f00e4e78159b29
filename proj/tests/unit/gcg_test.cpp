#include <gtest/gtest.h>

#include "shapes.hpp"
#include "z5/gcg.hpp"

using namespace z5;

TEST(Gcg, ParsesK3WithDefaults) {
    const Instance inst = parse_gcg(std::string(
        "# gcg v1\n"
        "n 3\n"
        "rot 0 1 2\nrot 1 2 0\nrot 2 0 1\n"
        "outer 3 0 1 2\n"));
    EXPECT_EQ(inst.graph.vertex_count(), 3);
    EXPECT_EQ(inst.phi.modulus(), 5);
    EXPECT_EQ(inst.phi.along(0, 1), 0);
    EXPECT_TRUE(validate(inst.graph).ok());
}

TEST(Gcg, RoundTrip) {
    Instance inst = make_instance(test::wheel(5));
    inst.phi.set(5, 2, 3);
    inst.phi.set(1, 0, 4);
    inst.colors.forbid(2, 1);
    inst.colors.forbid(2, 4);
    inst.colors.precolor(0, 2);
    inst.descriptor = "(wheel 5)";
    const std::string text = to_gcg(inst);
    const Instance back = parse_gcg(text);
    EXPECT_EQ(to_gcg(back), text);
    EXPECT_EQ(back.phi, inst.phi);
    EXPECT_EQ(back.colors, inst.colors);
    EXPECT_EQ(back.descriptor, "(wheel 5)");
}

TEST(Gcg, StrictErrors) {
    const std::string base = "n 3\nrot 0 1 2\nrot 1 2 0\nrot 2 0 1\n";
    EXPECT_THROW(parse_gcg(base + "bogus 1\n"), ParseError);
    EXPECT_THROW(parse_gcg(base + "rot 0 1 2\n"), ParseError);
    EXPECT_THROW(parse_gcg(std::string("n 3\nrot 0 1 2\nrot 1 2 0\nrot 2 1\n")), ParseError);
    EXPECT_THROW(parse_gcg(base + "outer 3 0 1 1\n"), ParseError);
    EXPECT_THROW(parse_gcg(base + "outer 4 0 1 2\n"), ParseError);
    EXPECT_THROW(parse_gcg(base + "edge 0 1 7\n"), ParseError);
    EXPECT_THROW(parse_gcg(base + "edge 0 1 1\nedge 1 0 2\n"), ParseError);
    EXPECT_THROW(parse_gcg(base + "precolor 0 1\nforbid 0 2\n"), ParseError);
    EXPECT_THROW(parse_gcg(std::string("rot 0 1\n")), ParseError);
    EXPECT_THROW(parse_gcg(std::string("n 3\nrot 0 1 2\nrot 1 2 0\n")), ParseError);
}

TEST(Gcg, EdgeLineSetsOrientation) {
    const Instance inst = parse_gcg(std::string("n 2\nrot 0 1\nrot 1 0\nedge 1 0 2\n"));
    EXPECT_EQ(inst.phi.along(1, 0), 2);
    EXPECT_EQ(inst.phi.along(0, 1), 3);
    EXPECT_TRUE(inst.graph.outer_cycle().empty());
}
