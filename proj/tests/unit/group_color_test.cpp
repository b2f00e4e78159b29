#include <gtest/gtest.h>

#include <random>

#include "shapes.hpp"
#include "z5/group_color.hpp"

using namespace z5;
using namespace z5::test;

namespace {

Graph single_edge() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

std::uint64_t brute_count(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    const int n = g.vertex_count();
    const int m = phi.modulus();
    Coloring c(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    while (true) {
        if (respects(g, phi, cs, c)) ++count;
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == m) c[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return count;
}

PhiAssignment random_phi(const Graph& g, std::mt19937& rng) {
    PhiAssignment phi(g);
    for (const Edge& e : g.edges()) {
        const Color v = static_cast<Color>(rng() % 5);
        if (rng() & 1) phi.set(e.u, e.v, v);
        else phi.set(e.v, e.u, v);
    }
    return phi;
}

}  // namespace

TEST(Tau, DirectFormula) {
    const Graph g = single_edge();
    PhiAssignment phi(g);
    // record u -> v with u = 0, v = 1; tau_v(1, u) = 1 - 3.
    phi.set(0, 1, 3);
    EXPECT_EQ(tau(phi, 1, 1, 0), 3);
    EXPECT_EQ(tau(phi, 0, 1, 1), 4);
    PhiAssignment zero(g);
    EXPECT_EQ(tau(zero, 1, 2, 0), 2);
    EXPECT_EQ(tau(zero, 0, 2, 1), 2);
}

TEST(Tau, RoundTripEveryValue) {
    const Graph g = single_edge();
    for (int orient = 0; orient < 2; ++orient)
        for (Color value = 0; value < 5; ++value) {
            PhiAssignment phi(g);
            if (orient == 0) phi.set(0, 1, value);
            else phi.set(1, 0, value);
            for (Color a = 0; a < 5; ++a) {
                EXPECT_EQ(tau(phi, 0, tau(phi, 1, a, 0), 1), a);
                EXPECT_EQ(tau(phi, 1, tau(phi, 0, a, 1), 0), a);
            }
            for (std::uint32_t bits = 0; bits < 32; ++bits) {
                const ColorSet s(bits);
                EXPECT_EQ(tau_set(phi, 0, tau_set(phi, 1, s, 0), 1), s);
            }
        }
}

TEST(Tau, NonEdgeThrows) {
    Graph g(3);
    g.add_edge(0, 1);
    PhiAssignment phi(g);
    EXPECT_THROW(tau(phi, 0, 1, 2), std::invalid_argument);
}

TEST(Proper, Examples) {
    const Graph g = single_edge();
    PhiAssignment zero(g);
    EXPECT_FALSE(is_proper(g, zero, {1, 1}));
    PhiAssignment phi(g);
    phi.set(0, 1, 2);
    EXPECT_FALSE(is_proper(g, phi, {0, 2}));
    EXPECT_TRUE(is_proper(g, phi, {0, 3}));
}

TEST(Proper, DifferenceAndTauFormsAgree) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const PlaneGraph pg = trial % 2 ? wheel(5) : octahedron();
        const Graph& g = pg.graph();
        const PhiAssignment phi = random_phi(g, rng);
        Coloring c(static_cast<std::size_t>(g.vertex_count()));
        for (auto& x : c) x = static_cast<Color>(rng() % 5);
        ASSERT_EQ(is_proper(g, phi, c), is_proper_tau(g, phi, c));
        const Edge e = g.edges()[rng() % g.edge_count()];
        ASSERT_EQ(is_proper(g, phi, c), is_proper(g, phi.flipped(e.u, e.v), c));
    }
}

TEST(Shift, IdentityAndInverse) {
    std::mt19937 rng(3);
    const Graph g = wheel(5).graph();
    const PhiAssignment phi = random_phi(g, rng);
    EXPECT_EQ(shift_phi(phi, 2, 0), phi);
    EXPECT_EQ(shift_phi(shift_phi(phi, 2, 3), 2, mod(-3, 5)), phi);
}

TEST(Shift, PreservesCounts) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const PlaneGraph pg = trial % 3 == 0 ? k4() : trial % 3 == 1 ? wheel(4) : octahedron();
        const Graph& g = pg.graph();
        const PhiAssignment phi = random_phi(g, rng);
        ColorSystem cs(g.vertex_count());
        cs.forbid(0, static_cast<Color>(rng() % 5));
        cs.precolor(1, static_cast<Color>(rng() % 5));
        const Vertex v0 = static_cast<Vertex>(rng() % static_cast<unsigned>(g.vertex_count()));
        const Color alpha = static_cast<Color>(rng() % 5);
        EXPECT_EQ(brute_count(g, phi, cs), brute_count(g, shift_phi(phi, v0, alpha), shift_colors(cs, v0, alpha)));
        // Without constraints the plain shift alone preserves the count.
        const ColorSystem free(g.vertex_count());
        EXPECT_EQ(brute_count(g, phi, free), brute_count(g, shift_phi(phi, v0, alpha), free));
    }
}

TEST(Triangle, Consistency) {
    const Graph g = triangle().graph();
    EXPECT_TRUE(triangle_consistent(g, PhiAssignment(g), 0, 1, 2));
    PhiAssignment phi(g);
    phi.set(0, 1, 1);
    phi.set(1, 2, 1);
    phi.set(2, 0, 3);
    EXPECT_TRUE(triangle_consistent(g, phi, 0, 1, 2));
    phi.set(2, 0, 2);
    EXPECT_FALSE(triangle_consistent(g, phi, 0, 1, 2));
}

TEST(Triangle, QuantifierCollapse) {
    const Graph g = triangle().graph();
    for (int code = 0; code < 125; ++code) {
        PhiAssignment phi(g);
        phi.set(0, 1, code % 5);
        phi.set(1, 2, code / 5 % 5);
        phi.set(2, 0, code / 25);
        int holds = 0;
        for (Color a = 0; a < 5; ++a) holds += tau(phi, 1, tau(phi, 0, a, 1), 2) == tau(phi, 0, a, 2);
        EXPECT_TRUE(holds == 0 || holds == 5);
        EXPECT_EQ(holds == 5, triangle_consistent(g, phi, 0, 1, 2));
    }
}

TEST(NormalizeStar, ZeroesTargetsAndKeepsCounts) {
    std::mt19937 rng(9);
    const PlaneGraph w = wheel(6);
    const Graph& g = w.graph();
    for (int trial = 0; trial < 50; ++trial) {
        const PhiAssignment phi = random_phi(g, rng);
        ColorSystem cs(g.vertex_count());
        cs.forbid(3, static_cast<Color>(rng() % 5));
        const std::vector<Vertex> targets{4, 5, 0, 1, 2};
        const NormalizedStar s = normalize_star(phi, cs, 6, targets);
        for (Vertex t : targets) EXPECT_EQ(s.phi.along(6, t), 0);
        EXPECT_EQ(brute_count(g, phi, cs), brute_count(g, s.phi, s.colors));
    }
    PhiAssignment zero(g);
    const std::vector<Vertex> targets{0, 1};
    EXPECT_EQ(normalize_star(zero, ColorSystem(7), 6, targets).phi, zero);
    const std::vector<Vertex> bad{0, 3};
    EXPECT_THROW(normalize_star(zero, ColorSystem(7), 1, bad), std::invalid_argument);
}

TEST(ColorSystem, PrecolorClearsForbidden) {
    ColorSystem cs(2);
    cs.forbid(0, 1);
    cs.forbid(0, 2);
    EXPECT_EQ(cs.available(0).size(), 3);
    cs.precolor(0, 4);
    EXPECT_TRUE(cs.forbidden(0).empty());
    EXPECT_EQ(cs.available(0), ColorSet::single(4));
}
