#include <gtest/gtest.h>

#include <algorithm>

#include "shapes.hpp"
#include "z5/disk.hpp"
#include "z5/plane_graph.hpp"

using namespace z5;
using namespace z5::test;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
    return std::any_of(r.problems.begin(), r.problems.end(),
                       [&](const std::string& p) { return p.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Validate, TriangleIsValid) { EXPECT_TRUE(validate(triangle()).ok()); }

TEST(Validate, K4IsValid) {
    const PlaneGraph g = k4();
    EXPECT_TRUE(validate(g).ok());
    EXPECT_EQ(g.trace_faces().size(), 4u);
}

TEST(Validate, QuadrilateralFaceReported) {
    PlaneGraph g({{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 1, 2, 3});
    const auto r = validate(g);
    EXPECT_TRUE(mentions(r, "inner face of length 4")) << (r.problems.empty() ? "" : r.problems[0]);
}

TEST(Validate, TooSmall) {
    PlaneGraph g({{1}, {0}}, {});
    EXPECT_TRUE(mentions(validate(g), "fewer than 3 vertices"));
}

TEST(Validate, AsymmetricRotationReported) {
    PlaneGraph g({{1, 2}, {2, 0}, {1}}, {0, 1, 2});
    EXPECT_FALSE(validate(g).ok());
}

TEST(Validate, ReversedOuterCycleReported) {
    const PlaneGraph good = k4();
    PlaneGraph bad(good.rotations(), {0, 2, 1});
    EXPECT_FALSE(validate(bad).ok());
}

TEST(Validate, WheelsAndBrokenWheels) {
    for (int k = 3; k <= 8; ++k) {
        EXPECT_TRUE(validate(wheel(k)).ok()) << k;
        EXPECT_TRUE(validate(broken_wheel(k)).ok()) << k;
    }
    EXPECT_TRUE(validate(octahedron()).ok());
    EXPECT_TRUE(validate(stacked_k4()).ok());
}

TEST(Chords, Examples) {
    EXPECT_TRUE(chords(k4()).empty());
    EXPECT_TRUE(chords(wheel(5)).empty());
    const auto c = chords(broken_wheel(4));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], Edge(0, 2));
    EXPECT_EQ(chords(broken_wheel(6)).size(), 3u);
}

TEST(SeparatingCycles, Examples) {
    for (int k = 3; k <= 7; ++k) {
        EXPECT_TRUE(separating_cycles(wheel(k), 3).empty());
        EXPECT_TRUE(separating_cycles(wheel(k), 4).empty());
    }
    EXPECT_TRUE(separating_cycles(octahedron(), 3).empty());
    const auto s = separating_cycles(stacked_k4(), 3);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], (std::vector<Vertex>{1, 2, 3}));
}

TEST(SeparatingCycles, OctahedronEquators) {
    // The three 4-cycles avoiding an antipodal pair each separate the pair.
    EXPECT_EQ(separating_cycles(octahedron(), 4).size(), 3u);
}

TEST(SeparatingCycles, NoSeparatingTriangleMeansAllTrianglesFacial) {
    const PlaneGraph g = octahedron();
    const auto faces = g.inner_faces();
    int triangles = 0;
    const Graph& h = g.graph();
    for (Vertex a = 0; a < 6; ++a)
        for (Vertex b = a + 1; b < 6; ++b)
            for (Vertex c = b + 1; c < 6; ++c)
                if (h.has_edge(a, b) && h.has_edge(b, c) && h.has_edge(a, c)) ++triangles;
    EXPECT_EQ(triangles, static_cast<int>(faces.size()) + 1);
}

TEST(Split, BrokenWheelAlongChord) {
    const PlaneGraph g = broken_wheel(4);
    const std::vector<Vertex> path{0, 2};
    const SplitResult s = split_along(g, path);
    EXPECT_TRUE(validate(s.part_one.graph).ok());
    EXPECT_TRUE(validate(s.part_two.graph).ok());
    EXPECT_EQ(s.part_one.graph.vertex_count(), 3);
    EXPECT_EQ(s.part_two.graph.vertex_count(), 3);
    EXPECT_EQ(s.shared_boundary, path);
}

TEST(Split, ChordsPreserveFaceCounts) {
    for (int k = 4; k <= 8; ++k) {
        const PlaneGraph g = broken_wheel(k);
        for (const Edge& e : chords(g)) {
            const std::vector<Vertex> path{e.u, e.v};
            const SplitResult s = split_along(g, path);
            ASSERT_TRUE(validate(s.part_one.graph).ok());
            ASSERT_TRUE(validate(s.part_two.graph).ok());
            EXPECT_EQ(s.part_one.graph.inner_faces().size() + s.part_two.graph.inner_faces().size(),
                      g.inner_faces().size());
        }
    }
}

TEST(Split, PathThroughHub) {
    // Wheel(6): outer 0..5, hub 6. Path 1-6-5 cuts off the fan around 0.
    const PlaneGraph g = wheel(6);
    const std::vector<Vertex> path{1, 6, 5};
    const SplitResult s = split_along(g, path);
    ASSERT_TRUE(validate(s.part_one.graph).ok());
    ASSERT_TRUE(validate(s.part_two.graph).ok());
    EXPECT_EQ(s.part_one.graph.inner_faces().size() + s.part_two.graph.inner_faces().size(), 6u);
    const auto n1 = s.part_one.graph.vertex_count();
    const auto n2 = s.part_two.graph.vertex_count();
    EXPECT_EQ(std::min(n1, n2), 4);
    EXPECT_EQ(std::max(n1, n2), 6);
}

TEST(Split, RejectsInteriorEndpoint) {
    const PlaneGraph g = wheel(5);
    const std::vector<Vertex> path{5, 1};
    EXPECT_THROW(split_along(g, path), std::invalid_argument);
}

TEST(Blocks, Examples) {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    EXPECT_EQ(blocks(path), (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));

    EXPECT_EQ(blocks(wheel(5).graph()).size(), 1u);

    Graph bowtie(5);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) bowtie.add_edge(a, b);
    EXPECT_EQ(blocks(bowtie), (std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}}));
}

TEST(Disk, InsideAndStrictlyInside) {
    const Disk d = Disk::of(stacked_k4());
    const std::vector<Vertex> tri{1, 2, 3};
    EXPECT_EQ(d.strictly_inside(tri), (std::vector<Vertex>{4}));
    const Disk inner = d.inside(tri);
    EXPECT_EQ(inner.faces().size(), 3u);
    EXPECT_EQ(inner.outer().front(), 1);
    EXPECT_TRUE(validate(inner.to_plane_graph()).ok());
    // Either orientation of the cycle gives the same region.
    const std::vector<Vertex> rev{1, 3, 2};
    EXPECT_EQ(d.inside(rev).faces().size(), 3u);
}

TEST(Disk, FromFacesRecoversOuterCycle) {
    const PlaneGraph g = wheel(5);
    const Disk d = Disk::from_faces(g.inner_faces());
    EXPECT_EQ(d.outer(), g.outer_cycle());
    EXPECT_TRUE(embedded_isomorphic(d.to_plane_graph(), g));
}

TEST(Disk, NeighboursOfOuterVertexRunAcrossInterior) {
    const Disk d = Disk::of(wheel(5));
    EXPECT_EQ(d.neighbors(0), (std::vector<Vertex>{1, 5, 4}));
}

TEST(Isomorphism, RelabelledWheel) {
    const PlaneGraph a = wheel(5);
    // Same wheel, hub numbered 0.
    std::vector<Triangle> faces;
    for (int i = 0; i < 5; ++i) faces.push_back({i + 1, (i + 1) % 5 + 1, 0});
    const PlaneGraph b = PlaneGraph::from_faces(6, faces, {1, 2, 3, 4, 5});
    EXPECT_TRUE(embedded_isomorphic(a, b));
    EXPECT_FALSE(embedded_isomorphic(a, wheel(6)));
    EXPECT_FALSE(embedded_isomorphic(broken_wheel(5), PlaneGraph(broken_wheel(5).rotations(), {1, 2, 3, 4, 0})));
}
