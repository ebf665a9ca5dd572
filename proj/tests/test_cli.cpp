#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ydlab/cli/app.hpp"

namespace fs = std::filesystem;
using namespace ydlab;

namespace {

bool g_update = false;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

struct GoldenCase {
    std::string name;
    int exit_code;
    std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> out;
    for (const auto& c : read_json_file("tests/golden/cases.json"))
        out.push_back({c["name"], c["exit"], c["args"].get<std::vector<std::string>>()});
    return out;
}

}  // namespace

TEST(Golden, MachineReportsMatch) {
    const auto cases = golden_cases();
    ASSERT_FALSE(cases.empty());
    for (const auto& c : cases) {
        SCOPED_TRACE(c.name);
        auto args = c.args;
        args.push_back("--machine");
        auto r = run_cli(args);
        EXPECT_EQ(r.code, c.exit_code) << r.out << r.err;
        const auto path = fs::path("tests/golden") / (c.name + ".json");
        if (g_update) {
            std::ofstream(path) << r.out;
            continue;
        }
        ASSERT_TRUE(fs::exists(path)) << "missing golden " << path;
        EXPECT_EQ(r.out, slurp(path));
        auto report = Json::parse(r.out);
        EXPECT_EQ(report["command"], c.args.front());
        EXPECT_EQ(report["status"] == "pass", c.exit_code == 0);
    }
}

TEST(Golden, ReportsAreByteIdentical) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"semisimple-report", "--kind", "long", "fixtures/h4_gf5.hopf", "--machine"},
             {"decompose", "fixtures/gf7_s3.hopf", "fixtures/objects/gf7_s3_free_long.obj", "--machine"}})
        EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, UnknownVerbIsRejectedFirst) {
    auto r = run_cli({"frobnicate", "does/not/exist.hopf"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown verb"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"verify-hopf"}).code, 2);
    EXPECT_EQ(run_cli({"hom", "gf5_c4", "a.obj"}).code, 2);
    EXPECT_EQ(run_cli({"verify-object", "--kind", "both", "gf2_c2", "x.obj"}).code, 2);
    EXPECT_EQ(run_cli({"semisimple-report", "gf2_c2", "--dims", "0"}).code, 2);
    EXPECT_EQ(run_cli({"verify-hopf", "gf2_c2", "--seed", "3"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, HumanReportListsAxiomFamilies) {
    auto r = run_cli({"verify-hopf", "fixtures/gf5_c4.hopf"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("verify-hopf: PASS", 0), 0u);
    for (const auto& f : hopf_axiom_families()) EXPECT_NE(r.out.find(f + ": passed"), std::string::npos) << f;
}

TEST(Cli, FailingObjectNamesTheBasisPair) {
    auto r = run_cli({"verify-object", "--kind", "yd", "fixtures/gf2_c2.hopf", "fixtures/objects/gf2_c2_bad.obj"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("h = g, m = v0"), std::string::npos) << r.out;
}

TEST(Cli, FixtureNamesAndFilesAgree) {
    for (const auto& name : fixture_names()) {
        auto by_name = run_cli({"verify-hopf", name, "--machine"});
        auto by_file = run_cli({"verify-hopf", "fixtures/" + name + ".hopf", "--machine"});
        EXPECT_EQ(by_name.code, 0) << name;
        EXPECT_EQ(by_name.out, by_file.out) << name;
    }
}

TEST(Cli, ShippedFixturesMatchBuiltins) {
    for (const auto& name : fixture_names()) {
        auto file = read_json_file("fixtures/" + name + ".hopf");
        auto builtin = std::visit([](const auto& h) { return to_json(*h); }, *builtin_fixture(name));
        EXPECT_EQ(file, builtin) << name;
    }
}

TEST(Cli, ConstructOutputIsAnObjectFile) {
    auto r = run_cli({"construct", "TENSOR(FREE(gf2_c2, triv), FREE(gf2_c2, triv))"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto tmp = fs::temp_directory_path() / "ydlab_construct.obj";
    std::ofstream(tmp) << r.out;
    auto v = run_cli({"verify-object", "gf2_c2", tmp.string(), "--machine"});
    EXPECT_EQ(v.code, 0) << v.out;
    auto report = Json::parse(v.out);
    EXPECT_EQ(report["object"]["dim"], 4);
    EXPECT_EQ(report["object"]["kind"], "yd");
    fs::remove(tmp);
}

TEST(Cli, ConstructNestsObjectFiles) {
    const auto tmp = fs::temp_directory_path() / "ydlab_nested.obj";
    std::ofstream(tmp) << run_cli({"construct", "FREE(gf5_c4, g)"}).out;
    auto r = run_cli({"construct", "--machine", "TENSOR(" + tmp.string() + ", TRIVIAL(gf5_c4, 2))"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(Json::parse(r.out)["object_summary"]["dim"], 8);
    fs::remove(tmp);
}

TEST(Cli, ConstructGateAndGrammarExitCodes) {
    EXPECT_EQ(run_cli({"construct", "--kind", "yd", "TENSORH(FREE(h4_gf5, triv), FREE(h4_gf5, triv))"}).code, 1);
    EXPECT_EQ(run_cli({"construct", "HOM(FREE(gf7_s3, triv), FREE(gf7_s3, triv))"}).code, 1);
    EXPECT_EQ(run_cli({"construct", "TRIVIAL(gf5_c4)"}).code, 2);
    EXPECT_EQ(run_cli({"construct", "TRIVIAL(gf5_c4, one)"}).code, 2);
    EXPECT_EQ(run_cli({"construct", "TRIVIAL(gf5_c4, 1) extra"}).code, 2);
    EXPECT_EQ(run_cli({"construct", "FREE(TRIVIAL(gf5_c4, 1), triv)"}).code, 2);
    EXPECT_EQ(run_cli({"construct", "TENSOR(TRIVIAL(gf5_c4, 1), TRIVIAL(q_c2, 1))"}).code, 2);
}

TEST(Cli, FieldOverrideAppliesToConstruct) {
    auto r = run_cli({"construct", "--field", "gf:3", "--machine", "FREE(q_c2, g)"});
    ASSERT_EQ(r.code, 0) << r.out;
    auto obj = Json::parse(r.out)["object"];
    EXPECT_TRUE(obj["hopf"].is_object());
    EXPECT_EQ(obj["hopf"]["field"]["p"], 3);
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--update-goldens") g_update = true;
    fs::current_path(YDLAB_SOURCE_DIR);
    return RUN_ALL_TESTS();
}
