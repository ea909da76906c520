#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "stabpoly/corpus.hpp"
#include "stabpoly/io.hpp"

using namespace stabpoly;
using stabpoly::testing::P;

namespace fs = std::filesystem;

namespace {

Json parse(const char* text) { return Json::parse(text); }

}  // namespace

TEST(PolyJson, RoundTrip) {
    const MultiPoly f = P(3, {{{2, 0, 1}, {1.0 / 3.0, -2.5}}, {{0, 1, 0}, 1e-7}, {{0, 0, 0}, -4.0}});
    const Json j = poly_to_json(f);
    EXPECT_EQ(poly_from_json(j), f);
    EXPECT_EQ(poly_from_json(Json::parse(j.dump())), f);
}

TEST(PolyJson, Layout) {
    const Json j = poly_to_json(P(2, {{{1, 1}, 1.0}, {{0, 0}, -1.0}}));
    EXPECT_EQ(j.at("nvars"), 2);
    ASSERT_EQ(j.at("terms").size(), 2u);
    EXPECT_EQ(j.at("terms")[0].at("exp"), Json::array({0, 0}));
    EXPECT_EQ(j.at("terms")[0].at("re"), -1.0);
    EXPECT_EQ(j.at("terms")[1].at("exp"), Json::array({1, 1}));
}

TEST(PolyJson, ZeroPolynomial) {
    const MultiPoly z = poly_from_json(parse(R"({"nvars": 2, "terms": []})"));
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.nvars(), 2);
}

TEST(PolyJson, Rejections) {
    const char* bad[] = {
        R"({"terms": []})",
        R"({"nvars": 2})",
        R"({"nvars": -1, "terms": []})",
        R"({"nvars": 2, "terms": [{"exp": [1], "re": 1, "im": 0}]})",
        R"({"nvars": 1, "terms": [{"exp": [-1], "re": 1, "im": 0}]})",
        R"({"nvars": 1, "terms": [{"exp": [1], "re": 1, "im": 0}, {"exp": [1], "re": 2, "im": 0}]})",
        R"({"nvars": 1, "terms": [{"exp": [1], "re": 1e-310, "im": 0}]})",
        R"({"nvars": 1, "terms": [{"exp": [1], "re": "one", "im": 0}]})",
        R"({"nvars": 1, "terms": [{"exp": [1.5], "re": 1, "im": 0}]})",
    };
    for (const char* text : bad) EXPECT_THROW(poly_from_json(parse(text)), ParseError) << text;
}

TEST(VerdictJson, NullMarginAndWitness) {
    Verdict v;
    v.tag = VerdictTag::ZeroPolynomial;
    v.min_margin = -std::numeric_limits<double>::infinity();
    Json j = verdict_to_json(v);
    EXPECT_EQ(j.at("tag"), "ZeroPolynomial");
    EXPECT_TRUE(j.at("min_margin").is_null());
    EXPECT_FALSE(j.contains("witness"));

    v.tag = VerdictTag::UnstableWitness;
    v.witness = Witness{{{0.0, 1.0}, {1.0, 2.0}}, Complex(0.5, 1.5)};
    j = verdict_to_json(v);
    EXPECT_EQ(j.at("witness").at("root").at("im"), 1.5);
    EXPECT_EQ(j.at("witness").at("b"), Json::array({1.0, 2.0}));
}

TEST(PencilJson, RoundTrip) {
    const MatrixPencil p = random_pencil(3, 2, 9, true);
    const MatrixPencil q = pencil_from_json(pencil_to_json(p));
    EXPECT_EQ(p.S, q.S);
    EXPECT_EQ(p.E, q.E);
    ASSERT_EQ(q.Ds.size(), 2u);
    EXPECT_EQ(p.Ds[1], q.Ds[1]);
}

TEST(SymbolJson, RoundTripAndBlockCheck) {
    const DiffOperatorSymbol s(P(2, {{{1, 1}, 1.0}, {{0, 0}, 1.0}}), 1);
    const DiffOperatorSymbol t = symbol_from_json(symbol_to_json(s));
    EXPECT_EQ(t.symbol(), s.symbol());
    EXPECT_EQ(t.block(), 1);
    Json j = symbol_to_json(s);
    j["block_split"] = 2;
    EXPECT_THROW(symbol_from_json(j), ParseError);
}

TEST(DiagonalJson, RoundTripAndShape) {
    const DiagonalOperator t = diagonal_from_table({{1, 2, 3}, {4, 5, 6}});
    EXPECT_EQ(diagonal_from_json(diagonal_to_json(t)).grid, t.grid);
    EXPECT_THROW(diagonal_from_json(parse(R"({"dims": [2, 2], "grid": [[1, 2]]})")), ParseError);
}

TEST(Files, MissingAndMalformed) {
    EXPECT_THROW(read_json_file("/nonexistent/definitely/missing.json"), ParseError);
    const fs::path tmp = fs::temp_directory_path() / "stabpoly_io_malformed.json";
    std::ofstream(tmp) << "{ not json";
    EXPECT_THROW(read_json_file(tmp.string()), ParseError);
    fs::remove(tmp);
}

TEST(Corpus, MatchesShippedGolden) {
    const auto built = build_corpus();
    const auto shipped = read_corpus(STABPOLY_CORPUS_DIR);
    ASSERT_EQ(built.size(), 200u);
    ASSERT_EQ(shipped.size(), built.size());
    for (std::size_t k = 0; k < built.size(); ++k) {
        EXPECT_EQ(built[k].id(), shipped[k].id());
        EXPECT_EQ(built[k].params, shipped[k].params);
        EXPECT_EQ(built[k].poly, shipped[k].poly) << built[k].id();
    }
}

TEST(Corpus, RegeneratesFromManifest) {
    for (const auto& e : read_corpus(STABPOLY_CORPUS_DIR))
        EXPECT_EQ(generate_member(e.family, e.seed, e.params), e.poly) << e.id();
}

TEST(Corpus, WriteReadRoundTrip) {
    const fs::path dir = fs::temp_directory_path() / "stabpoly_corpus_roundtrip";
    fs::remove_all(dir);
    const auto all = build_corpus();
    std::vector<CorpusEntry> few(all.begin(), all.begin() + 8);
    write_corpus(dir.string(), few);
    const auto back = read_corpus(dir.string());
    ASSERT_EQ(back.size(), few.size());
    for (std::size_t k = 0; k < few.size(); ++k) EXPECT_EQ(back[k].poly, few[k].poly);
    fs::remove_all(dir);
    EXPECT_THROW(read_corpus(dir.string()), ParseError);
}
