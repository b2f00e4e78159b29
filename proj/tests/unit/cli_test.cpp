#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "z5/cli.hpp"
#include "z5/families.hpp"
#include "z5/gcg.hpp"

using namespace z5;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "z5lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("z5lab-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write_instance(const std::string& name, const Instance& in) const {
        write_gcg_file(path(name), in);
        return path(name);
    }

    std::filesystem::path dir_;
};

Instance broken_wheel_witness() {
    Instance in = make_instance(build(Descriptor::broken(4)).graph);
    in.colors.precolor(3, 0);
    in.colors.precolor(0, 1);
    in.colors.precolor(1, 2);
    in.colors.set_forbidden(2, ColorSet(0b11000));
    return in;
}

}  // namespace

TEST_F(CliTest, CountTriangle) {
    const auto file = write_instance("k3.gcg", make_instance(build(Descriptor::broken(3)).graph));
    const Result r = call({"count", file});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "seed: 1\ncolorings: 60\n");
}

TEST_F(CliTest, SeedIsEchoed) {
    const auto file = write_instance("k3.gcg", make_instance(build(Descriptor::broken(3)).graph));
    EXPECT_EQ(call({"--seed", "17", "count", file}).out.rfind("seed: 17\n", 0), 0u);
    EXPECT_EQ(call({"count", file, "--seed", "18"}).out.rfind("seed: 18\n", 0), 0u);
}

TEST_F(CliTest, Extend3EmitsCertificate) {
    const auto file = write_instance("bw4.gcg", broken_wheel_witness());
    const auto cert = path("cert.gcg");
    const Result r = call({"extend3", file, "--emit-certificate", cert});
    EXPECT_EQ(r.code, kExitObstruction);
    EXPECT_NE(r.out.find("obstruction: (broken 4)"), std::string::npos);
    const Instance back = read_gcg_file(cert);
    EXPECT_EQ(back.descriptor, "(broken 4)");
    EXPECT_EQ(back.graph.vertex_count(), 4);
}

TEST_F(CliTest, Extend3Colors) {
    Instance in = broken_wheel_witness();
    in.colors.set_forbidden(2, ColorSet(0b10000));
    const Result r = call({"extend3", write_instance("ok.gcg", in)});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("coloring: 1 2 3 0"), std::string::npos);
}

TEST_F(CliTest, Extend2AndEnumerate) {
    Instance in = make_instance(build(Descriptor::wheel(5)).graph);
    in.colors.precolor(0, 0);
    in.colors.precolor(1, 1);
    const auto file = write_instance("w5.gcg", in);
    EXPECT_EQ(call({"extend2", file}).code, kExitOk);
    const Result e = call({"enumerate", file, "--limit", "3"});
    EXPECT_EQ(e.code, kExitOk);
    EXPECT_NE(e.out.find("listed: 3"), std::string::npos);
}

TEST_F(CliTest, CommonDifferenceCommand) {
    Instance in = make_instance(build(Descriptor::broken(4)).graph);
    in.colors.set_forbidden(2, ColorSet(0b11));
    const auto file = write_instance("bw4.gcg", in);
    EXPECT_EQ(call({"lemma1-alpha", file}).code, kExitInput);
    const Result none = call({"lemma1-alpha", file, "--any-graph"});
    EXPECT_EQ(none.code, kExitObstruction);
    EXPECT_NE(none.out.find("alpha: none"), std::string::npos);
    const Result wheel = call({"lemma1-alpha", write_instance("w4.gcg", make_instance(build(Descriptor::wheel(4)).graph))});
    EXPECT_EQ(wheel.code, kExitOk);
}

TEST_F(CliTest, FamilyGenAndRecognize) {
    const auto file = path("ins.gcg");
    EXPECT_EQ(call({"family", "gen", "(insert (wheel 5) t1 j=1)", "--output", file}).code, kExitOk);
    const Result r = call({"family", "recognize", file});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("multi-wheel: yes"), std::string::npos);
    const Result list = call({"family", "gen", "--n-max", "5"});
    EXPECT_NE(list.out.find("members: 8"), std::string::npos);
    Instance octa = make_instance(PlaneGraph::from_faces(
        6, std::vector<Triangle>{{0, 1, 3}, {1, 2, 4}, {2, 0, 5}, {1, 4, 3}, {2, 5, 4}, {0, 3, 5}, {3, 4, 5}},
        {0, 1, 2}));
    EXPECT_EQ(call({"family", "recognize", write_instance("octa.gcg", octa)}).code, kExitObstruction);
}

TEST_F(CliTest, CheckPassesAndRepeats) {
    const auto report = path("report.txt");
    const Result a = call({"check", "lemma1", "--n-max", "7", "--samples", "5", "--seed", "7", "--report", report});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out.substr(a.out.size() - 5), "PASS\n");
    const Result b = call({"check", "lemma1", "--n-max", "7", "--samples", "5", "--seed", "7", "--jobs", "4"});
    EXPECT_EQ(a.out, b.out);
    std::ifstream f(report);
    std::string first;
    std::getline(f, first);
    EXPECT_EQ(first.rfind("#", 0), 0u);
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(call({}).code, kExitInput);
    EXPECT_EQ(call({"count"}).code, kExitInput);
    EXPECT_EQ(call({"frobnicate"}).code, kExitInput);
    EXPECT_EQ(call({"count", path("missing.gcg")}).code, kExitInput);
    std::ofstream(path("bad.gcg")) << "n 3\nrot 0 1\n";
    const Result bad = call({"count", path("bad.gcg")});
    EXPECT_EQ(bad.code, kExitInput);
    EXPECT_FALSE(bad.err.empty());
    EXPECT_EQ(call({"check", "lemma1", "--n-max", "20"}).code, kExitInput);
}

TEST_F(CliTest, ValidateReportsProblems) {
    const auto good = write_instance("k4.gcg", make_instance(build(Descriptor::wheel(3)).graph));
    EXPECT_EQ(call({"validate", good}).code, kExitOk);
    // A square face is not a triangle.
    std::ofstream(path("square.gcg")) << "n 4\nrot 0 1 3\nrot 1 2 0\nrot 2 3 1\nrot 3 0 2\nouter 4 0 1 2 3\n";
    const Result r = call({"validate", path("square.gcg")});
    EXPECT_EQ(r.code, kExitObstruction);
    EXPECT_NE(r.out.find("invalid:"), std::string::npos);
}
