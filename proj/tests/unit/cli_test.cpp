#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using linkhom::cli::run;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "linkhom");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("linkhom_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    static std::string counterexample() { return std::string(LINKHOM_DATA_DIR) + "/counterexample.json"; }

    fs::path dir_;
};

TEST_F(Cli, DemoCounterexample) {
    Result r = invoke({"demo", "counterexample"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "fiber dim at t=0: 4, generic dim: 3, rm: 3, NOT FLAT");
}

TEST_F(Cli, SolveExitCodes) {
    EXPECT_EQ(invoke({"solve", counterexample()}).code, 2);
    EXPECT_EQ(invoke({"solve", counterexample(), "--expect-failure"}).code, 0);
}

TEST_F(Cli, CheckExitCodes) {
    Result bad = invoke({"check", counterexample()});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(first_line(bad.out), "conditions I, II, III: failed III at t=0");

    const std::string out = path("valid.json");
    ASSERT_EQ(invoke({"gen", "--r", "2", "--m", "3", "--m1", "1", "--n", "3", "--s", "0,1", "--seed", "7", "--out",
                      out})
                  .code,
              0);
    Result ok = invoke({"check", out, "--point", "0", "--point", "5"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(first_line(ok.out), "conditions I, II, III: all hold");
    EXPECT_NE(ok.out.find("skipped_points: [\"t=5\"]"), std::string::npos);
    EXPECT_EQ(invoke({"solve", out}).code, 0);
}

TEST_F(Cli, StructureExitCodes) {
    EXPECT_EQ(invoke({"structure", counterexample(), "--point", "0"}).code, 1);
    Result trivial = invoke({"structure", counterexample(), "--point", "2"});
    EXPECT_EQ(trivial.code, 0);
    EXPECT_NE(trivial.out.find("s is a unit here"), std::string::npos);
    EXPECT_EQ(invoke({"structure", counterexample(), "--point", "x"}).code, 3);
}

TEST_F(Cli, JsonReports) {
    Result r = invoke({"--format", "json", "solve", counterexample(), "--basis"});
    EXPECT_EQ(r.code, 2);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["format_version"], 1);
    EXPECT_EQ(j["generic_dim"], 3);
    EXPECT_EQ(j["fiber_dims"][0]["dim"], 4);
    EXPECT_EQ(j["kernel_basis"].size(), 3u);
    EXPECT_FALSE(j.contains("generated_at"));
    EXPECT_TRUE(nlohmann::json::parse(invoke({"--timestamps", "--format", "json", "demo", "counterexample"}).out)
                    .contains("generated_at"));
}

TEST_F(Cli, DeterministicOutput) {
    EXPECT_EQ(invoke({"check", counterexample()}).out, invoke({"check", counterexample()}).out);
    const std::string a = path("a.json"), b = path("b.json");
    for (const auto& p : {a, b})
        invoke({"gen", "--r", "1", "--m", "4", "--m1", "2", "--n", "4", "--s", "0,0,1", "--seed", "3", "--break",
                "III", "--out", p});
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    EXPECT_FALSE(sa.str().empty());
    EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(Cli, InputErrors) {
    EXPECT_EQ(invoke({"check", path("missing.json")}).code, 3);
    Result unknown = invoke({"check", write("u.json", R"({"r":1,"bogus":1})")});
    EXPECT_EQ(unknown.code, 3);
    EXPECT_NE(unknown.err.find("unknown field 'bogus'"), std::string::npos);
    std::string ragged = write("r.json", R"({"r":1,"m":2,"n":2,"s":["1"],"f_fwd":[[["1"]]],"f_bwd":[[["1"]]],
        "g_fwd":[[["1","0"],["0"]]],"g_bwd":[[["1","0"],["0","1"]]]})");
    EXPECT_EQ(invoke({"solve", ragged}).code, 3);
    EXPECT_EQ(invoke({"frobnicate"}).code, 3);
    EXPECT_EQ(invoke({}).code, 3);
    EXPECT_EQ(invoke({"--format", "yaml", "demo", "counterexample"}).code, 3);
    EXPECT_EQ(invoke({"gen", "--r", "1", "--m", "2", "--m1", "1", "--n", "3", "--s", "0,1", "--seed", "1", "--break",
                      "III", "--out", path("x.json")})
                  .code,
              3);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

}  // namespace
