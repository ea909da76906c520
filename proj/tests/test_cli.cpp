// Drives the stabpoly executable and checks exit codes and JSON output.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "stabpoly/io.hpp"

using namespace stabpoly;
using stabpoly::testing::P;

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + STABPOLY_CLI + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("stabpoly_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string put(const std::string& name, const MultiPoly& f) {
        const std::string path = (dir_ / name).string();
        write_json(path, poly_to_json(f));
        return path;
    }
    std::string put_text(const std::string& name, const std::string& text) {
        const std::string path = (dir_ / name).string();
        std::ofstream(path) << text;
        return path;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, CheckStableExitCodes) {
    const CliResult a = run("check stable --in " + put("sum.json", P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}})));
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(Json::parse(a.out).at("result").at("tag"), "StableLikely");

    const CliResult b = run("check stable --in " + put("onepxy.json", P(2, {{{1, 1}, 1.0}, {{0, 0}, 1.0}})));
    EXPECT_EQ(b.code, 1);
    EXPECT_TRUE(Json::parse(b.out).at("result").contains("witness"));

    const CliResult c = run("check stable --in " + put("empty.json", MultiPoly(2)));
    EXPECT_EQ(c.code, 2);
    EXPECT_EQ(Json::parse(c.out).at("result").at("tag"), "ZeroPolynomial");
}

TEST_F(Cli, InputErrors) {
    EXPECT_EQ(run("check stable --in " + put_text("bad.json", "{ nope")).code, 3);
    EXPECT_EQ(run("check stable --in " + (dir_ / "missing.json").string()).code, 3);
    const std::string f = put("f.json", P(1, {{{1}, 1.0}}));
    const std::string g = put("g.json", P(2, {{{1, 0}, 1.0}}));
    EXPECT_EQ(run("check interlace --in " + f + " --with " + g).code, 4);
    EXPECT_EQ(run("check stable --in " + f + " --lines 0").code, 4);
    EXPECT_EQ(run("check bogus --in " + f).code, 5);
    EXPECT_EQ(run("").code, 5);
}

TEST_F(Cli, OtherChecks) {
    const std::string xy1 = put("xy1.json", P(2, {{{1, 1}, 1.0}, {{0, 0}, -1.0}}));
    const std::string opxy = put("opxy.json", P(2, {{{1, 1}, 1.0}, {{0, 0}, 1.0}}));
    EXPECT_EQ(run("check bilinear --in " + xy1).code, 0);
    EXPECT_EQ(run("check bilinear --in " + opxy).code, 1);
    EXPECT_EQ(run("check rayleigh --in " + opxy).code, 1);
    EXPECT_EQ(run("check coeffs --in " + xy1).code, 0);
    EXPECT_EQ(run("check coeffs --in " + opxy).code, 1);
    const CliResult hb = run("check hb --in " + xy1);
    EXPECT_EQ(hb.code, 0);
    EXPECT_TRUE(Json::parse(hb.out).at("result").at("agree").get<bool>());
    const std::string f = put("f.json", P(1, {{{2}, 1.0}, {{0}, -1.0}}));
    const std::string g = put("g.json", P(1, {{{1}, 1.0}}));
    EXPECT_EQ(run("check interlace --in " + f + " --with " + g).code, 0);
}

TEST_F(Cli, SeedPrecedence) {
    const std::string f = put("f.json", P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}}));
    const auto seed_of = [](const CliResult& r) { return Json::parse(r.out).at("config").at("seed").get<std::uint64_t>(); };
    EXPECT_EQ(seed_of(run("check stable --in " + f)), 0xC0FFEEu);
    EXPECT_EQ(seed_of(run("check stable --in " + f, "STABPOLY_SEED=77")), 77u);
    EXPECT_EQ(seed_of(run("check stable --in " + f + " --seed 5", "STABPOLY_SEED=77")), 5u);
}

TEST_F(Cli, OutputIsDeterministic) {
    const std::string f = put("f.json", P(3, {{{1, 1, 0}, 1.0}, {{0, 1, 1}, 1.0}, {{1, 0, 1}, 1.0}}));
    EXPECT_EQ(run("check stable --in " + f).out, run("check stable --in " + f).out);
    EXPECT_FALSE(Json::parse(run("check stable --in " + f).out).contains("seconds"));
    EXPECT_TRUE(Json::parse(run("check stable --timings --in " + f).out).contains("seconds"));
}

TEST_F(Cli, ConstructRecurrence) {
    const std::string out = (dir_ / "rec.json").string();
    const CliResult r = run("construct recurrence --d 1 --steps 3 --unit --seed 0 --out " + out);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(read_poly_file(out), P(1, {{{3}, 1.0}, {{1}, -2.0}}));
    EXPECT_EQ(Json::parse(r.out).at("manifest").at("family"), "recurrence");
}

TEST_F(Cli, ConstructPencilPassesCheck) {
    const std::string out = (dir_ / "pencil.json").string();
    EXPECT_EQ(run("construct pencil --n 2 --d 2 --seed 1 --out " + out).code, 0);
    EXPECT_EQ(run("check stable --in " + out).code, 0);
    EXPECT_EQ(run("construct pencil --n 20 --d 2").code, 4);
}

TEST_F(Cli, ConstructJohnsonScalar) {
    const std::string out = (dir_ / "j.json").string();
    EXPECT_EQ(run("construct johnson --n 1 --m 2 --d 1 --seed 3 --out " + out).code, 0);
    EXPECT_EQ(read_poly_file(out).degree(), 1);
}

TEST_F(Cli, SuiteFilterAndCorruption) {
    const CliResult sub = run("suite --corpus " + std::string(STABPOLY_CORPUS_DIR) + " --filter interlacing.reflexive");
    EXPECT_EQ(sub.code, 0);
    const Json rep = Json::parse(sub.out).at("result");
    ASSERT_FALSE(rep.at("results").empty());
    for (const auto& r : rep.at("results")) EXPECT_NE(r.at("id").get<std::string>().find("interlacing"), std::string::npos);

    const fs::path corpus = dir_ / "corpus";
    fs::copy(STABPOLY_CORPUS_DIR, corpus, fs::copy_options::recursive);
    std::ofstream(corpus / "hand" / "0.json") << "{\"nvars\": 1, \"terms\": [";
    EXPECT_EQ(run("suite --corpus " + corpus.string() + " --filter hand").code, 3);
    EXPECT_EQ(run("suite --corpus " + (dir_ / "nowhere").string()).code, 3);
}
