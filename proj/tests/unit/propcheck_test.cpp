#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "z5/propcheck.hpp"
#include "z5/random.hpp"

using namespace z5;

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        EXPECT_EQ(x, b.next());
        differs = differs || x != c.next();
    }
    EXPECT_TRUE(differs);
    EXPECT_EQ(Rng::derive(1, "x", 3).next(), Rng::derive(1, "x", 3).next());
    EXPECT_NE(Rng::derive(1, "x", 3).next(), Rng::derive(1, "y", 3).next());
    EXPECT_NE(Rng::derive(1, "x", 3).next(), Rng::derive(1, "x", 4).next());
}

TEST(Rng, BelowStaysInRange) {
    Rng r(9);
    for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
    for (int i = 0; i < 1000; ++i) {
        const int x = r.between(-2, 2);
        EXPECT_GE(x, -2);
        EXPECT_LE(x, 2);
    }
}

TEST(RandomTriangulation, SmallCases) {
    const PlaneGraph k3 = random_triangulation(3, 1);
    EXPECT_EQ(k3.vertex_count(), 3);
    EXPECT_EQ(k3.graph().edge_count(), 3u);
    const PlaneGraph k4 = random_triangulation(4, 1);
    EXPECT_EQ(k4.graph().edge_count(), 6u);
    EXPECT_THROW(random_triangulation(2, 1), std::invalid_argument);
}

TEST(RandomTriangulation, AlwaysValidTriangulations) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const int n = 3 + static_cast<int>(s % 12);
        const PlaneGraph g = random_triangulation(n, s);
        EXPECT_TRUE(validate(g).ok());
        EXPECT_EQ(g.outer_length(), 3);
        EXPECT_EQ(g.graph().edge_count(), static_cast<std::size_t>(3 * n - 6));
        EXPECT_TRUE(embedded_isomorphic(g, random_triangulation(n, s)));
    }
}

TEST(RandomNearTriangulation, AlwaysValid) {
    std::set<int> lengths;
    for (std::uint64_t s = 0; s < 500; ++s) {
        Rng rng(s);
        const PlaneGraph g = random_near_triangulation(3 + static_cast<int>(s % 10), rng);
        EXPECT_TRUE(validate(g).ok()) << s;
        lengths.insert(g.outer_length());
    }
    EXPECT_GT(lengths.size(), 5u);
}

TEST(RandomPhi, Modes) {
    Rng rng(3);
    const PlaneGraph g = random_triangulation(8, rng);
    const PhiAssignment zero = random_phi(g.graph(), rng, PhiMode::Zero);
    for (const EdgeRecord& r : zero.records()) EXPECT_EQ(r.value, 0);
    const PhiAssignment sparse = random_phi(g.graph(), rng, PhiMode::Sparse);
    EXPECT_EQ(sparse.records().size(), g.graph().edge_count());
}

TEST(TwoInnerVertices, ShapeA) {
    for (int k = 4; k <= 9; ++k)
        for (int i = 3; i <= k - 1; ++i) {
            const PlaneGraph g = two_inner_vertices_a(k, i);
            ASSERT_TRUE(validate(g).ok()) << k << ' ' << i;
            const Vertex u = k, v = k + 1;
            EXPECT_TRUE(g.graph().has_edge(u, v));
            // u on v1..vi, v on vi..vk and v1 (outer labels shifted by one).
            for (int j = 1; j <= k; ++j) {
                EXPECT_EQ(g.graph().has_edge(u, j - 1), j <= i) << k << ' ' << i << ' ' << j;
                EXPECT_EQ(g.graph().has_edge(v, j - 1), j >= i || j == 1) << k << ' ' << i << ' ' << j;
            }
        }
    EXPECT_THROW(two_inner_vertices_a(5, 2), std::invalid_argument);
    EXPECT_THROW(two_inner_vertices_a(5, 5), std::invalid_argument);
}

TEST(TwoInnerVertices, ShapeB) {
    for (int k = 5; k <= 9; ++k)
        for (int i = 4; i <= k - 1; ++i) {
            const PlaneGraph g = two_inner_vertices_b(k, i);
            ASSERT_TRUE(validate(g).ok()) << k << ' ' << i;
            const Vertex u = k, v = k + 1;
            EXPECT_TRUE(g.graph().has_edge(u, v));
            for (int j = 1; j <= k; ++j) {
                EXPECT_EQ(g.graph().has_edge(u, j - 1), j >= 2 && j <= i);
                EXPECT_EQ(g.graph().has_edge(v, j - 1), j <= 2 || j >= i);
            }
        }
    EXPECT_THROW(two_inner_vertices_b(5, 3), std::invalid_argument);
}

TEST(RunCheck, RejectsBadConfig) {
    CheckConfig cfg = default_config("lemma1");
    cfg.n_max = 15;
    EXPECT_THROW(run_check("lemma1", cfg), std::invalid_argument);
    EXPECT_THROW(run_check("lemma9", default_config("lemma1")), std::invalid_argument);
    EXPECT_THROW(default_config("nope"), std::invalid_argument);
    cfg = default_config("prop1");
    cfg.samples = 0;
    EXPECT_THROW(run_check("prop1", cfg), std::invalid_argument);
}

TEST(RunCheck, EveryIdHasDefaults) {
    for (const std::string& id : check_ids()) EXPECT_NO_THROW(default_config(id)) << id;
}

TEST(RunCheck, SmallRunsPassAndRepeat) {
    for (const std::string& id : {"calculus", "prop1", "theorem2", "theorem3", "lemma1", "lemma3a", "lemma5",
                                  "theorem4", "corollary"}) {
        CheckConfig cfg = default_config(id);
        cfg.n_max = 7;
        cfg.samples = 3;
        cfg.instances = 20;
        cfg.seed = 99;
        const CheckReport a = run_check(id, cfg);
        EXPECT_TRUE(a.passed()) << report_body(a);
        EXPECT_GT(a.instances_tested, 0u) << id;
        cfg.jobs = 3;
        const CheckReport b = run_check(id, cfg);
        EXPECT_EQ(report_body(a), report_body(b)) << id;
    }
}

TEST(Report, Format) {
    CheckConfig cfg = default_config("prop1");
    cfg.instances = 5;
    cfg.seed = 4;
    const CheckReport rep = run_check("prop1", cfg);
    std::ostringstream out;
    write_report(out, rep);
    const std::string text = out.str();
    std::istringstream lines(text);
    std::string line, last;
    bool body = false;
    while (std::getline(lines, line)) {
        if (line.rfind("#", 0) == 0) EXPECT_FALSE(body) << "header line after body: " << line;
        else body = true;
        last = line;
    }
    EXPECT_EQ(last, "PASS");
    EXPECT_NE(text.find("seed: 4\n"), std::string::npos);
    EXPECT_NE(text.find("# wall-clock: "), std::string::npos);
    EXPECT_EQ(text.substr(text.find("property:")), report_body(rep));
}

TEST(Report, FailureLine) {
    CheckReport rep;
    rep.property = "demo";
    rep.counterexample_count = 3;
    const std::string body = report_body(rep);
    EXPECT_EQ(body.substr(body.rfind("FAIL")), "FAIL 3\n");
}
