#include <cmath>

#include "helpers.hpp"
#include "stabpoly/operators.hpp"

using namespace stabpoly;
using stabpoly::testing::Near;
using stabpoly::testing::P;
using stabpoly::testing::U;

TEST(NegPartial, Examples) {
    const MultiPoly x2 = P(1, {{{2}, 1.0}});
    EXPECT_EQ(apply_neg_partial(P(1, {{{1}, 1.0}}), x2), P(1, {{{1}, -2.0}}));
    EXPECT_EQ(apply_neg_partial(P(1, {{{1}, 1.0}, {{0}, 1.0}}), x2), P(1, {{{2}, 1.0}, {{1}, -2.0}}));
    const MultiPoly f = P(2, {{{1, 1}, 1.0}, {{0, 0}, -1.0}});
    EXPECT_EQ(apply_neg_partial(f, P(2, {{{1, 1}, 1.0}})), P(2, {{{0, 0}, 1.0}, {{1, 1}, -1.0}}));
    EXPECT_THROW(apply_neg_partial(f, x2), DimensionMismatch);
}

TEST(ExpNegMixed, Examples) {
    EXPECT_EQ(exp_neg_mixed(P(2, {{{1, 1}, 1.0}})), P(2, {{{1, 1}, 1.0}, {{0, 0}, -1.0}}));
    EXPECT_EQ(exp_neg_mixed(P(2, {{{2, 2}, 1.0}})), P(2, {{{2, 2}, 1.0}, {{1, 1}, -4.0}, {{0, 0}, 2.0}}));
    const MultiPoly s = P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}});
    EXPECT_EQ(exp_neg_mixed(s), s);
    EXPECT_THROW(exp_neg_mixed(P(3, {{{1, 1, 1}, 1.0}})), std::invalid_argument);
}

TEST(ExpNegMixed, BlockPairsVariables) {
    // x1 y1 x2 y2 with block 2: variables (x1, x2, y1, y2).
    const MultiPoly f = P(4, {{{1, 1, 1, 1}, 1.0}});
    const MultiPoly want = P(4, {{{1, 1, 1, 1}, 1.0}, {{0, 1, 0, 1}, -1.0}, {{1, 0, 1, 0}, -1.0}, {{0, 0, 0, 0}, 1.0}});
    EXPECT_EQ(exp_neg_mixed(f, 2), want);
}

TEST(OperatorSymbol, Examples) {
    const MultiPoly v = P(2, {{{0, 1}, 1.0}});
    EXPECT_EQ(symbol_of(DiffOperatorSymbol(v, 1)), v);
    EXPECT_THROW(DiffOperatorSymbol(v, 2), std::invalid_argument);
}

TEST(ApplyOperator, Examples) {
    const MultiPoly x2 = P(1, {{{2}, 1.0}});
    EXPECT_EQ(apply_operator(DiffOperatorSymbol(P(2, {{{0, 1}, 1.0}}), 1), x2), P(1, {{{1}, -2.0}}));
    EXPECT_EQ(apply_operator(DiffOperatorSymbol(P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}}), 1), x2),
              P(1, {{{3}, 1.0}, {{1}, -2.0}}));
    const MultiPoly g = P(1, {{{3}, {1.0, 2.0}}, {{0}, 7.0}});
    EXPECT_EQ(apply_operator(DiffOperatorSymbol(MultiPoly::constant(2, 1.0), 1), g), g);
}

TEST(Preserver, Examples) {
    SampleConfig cfg;
    cfg.num_lines = 200;
    const std::vector<MultiPoly> inputs{P(1, {{{1}, 1.0}}), P(1, {{{2}, 1.0}, {{0}, -1.0}})};

    const PreserverReport a = preserver_test(DiffOperatorSymbol(P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}}), 1), cfg, inputs);
    EXPECT_EQ(a.symbol_verdict.tag, VerdictTag::StableLikely);
    EXPECT_FALSE(a.counterexample);

    const PreserverReport b =
        preserver_test(DiffOperatorSymbol(P(2, {{{1, 1}, 1.0}, {{0, 0}, -1.0}}), 1), cfg, inputs);
    EXPECT_EQ(b.symbol_verdict.tag, VerdictTag::StableLikely);

    const PreserverReport c =
        preserver_test(DiffOperatorSymbol(P(2, {{{1, 1}, 1.0}, {{0, 0}, 1.0}}), 1), cfg, inputs);
    EXPECT_EQ(c.symbol_verdict.tag, VerdictTag::UnstableWitness);
    ASSERT_TRUE(c.counterexample);
    // Oracle: (1 + x v) acts as g - x g'.
    const MultiPoly& g = inputs[*c.counterexample];
    const MultiPoly x = MultiPoly::variable(1, 0);
    EXPECT_EQ(*c.image, g - x * partial_derivative(g, 0));
    EXPECT_EQ(c.image_verdict->tag, VerdictTag::UnstableWitness);
}

TEST(DiagonalFactor, ProductGrid) {
    std::vector<std::vector<double>> t(4, std::vector<double>(3));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = std::pow(2.0, i) * std::pow(3.0, j);
    const DiagonalFactorResult r = diagonal_factor(diagonal_from_table(t));
    ASSERT_TRUE(r.factors);
    EXPECT_EQ((*r.factors)[0], (std::vector<double>{1, 2, 4, 8}));
    EXPECT_EQ((*r.factors)[1], (std::vector<double>{1, 3, 9}));
}

TEST(DiagonalFactor, ViolatingCell) {
    std::vector<std::vector<double>> t(3, std::vector<double>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = i + j + 1;
    const DiagonalFactorResult r = diagonal_factor(diagonal_from_table(t));
    EXPECT_FALSE(r.factors);
    ASSERT_TRUE(r.violating_cell);
    EXPECT_EQ(*r.violating_cell, (ExponentVector{0, 0}));
}

TEST(DiagonalFactor, OnesAndZeros) {
    const DiagonalFactorResult r = diagonal_factor(diagonal_from_table({{1, 1}, {1, 1}}));
    ASSERT_TRUE(r.factors);
    for (const auto& s : *r.factors)
        for (double v : s) EXPECT_EQ(v, 1.0);
    const DiagonalFactorResult z = diagonal_factor(diagonal_from_table({{0, 1}, {1, 1}}));
    EXPECT_FALSE(z.factors);
    EXPECT_FALSE(z.diagnostic.empty());
}

TEST(ApplyDiagonal, ScalesTerms) {
    const DiagonalOperator t = diagonal_from_table({{1, 2}, {3, 4}});
    EXPECT_EQ(apply_diagonal(t, P(2, {{{1, 1}, 1.0}, {{0, 1}, 1.0}})), P(2, {{{1, 1}, 4.0}, {{0, 1}, 2.0}}));
}

TEST(Hermite, Polynomials) {
    EXPECT_EQ(hermite(0), U({1.0}));
    EXPECT_EQ(hermite(1), U({0.0, 2.0}));
    EXPECT_EQ(hermite(2), U({-2.0, 0.0, 4.0}));
    EXPECT_EQ(hermite(3), U({0.0, -12.0, 0.0, 8.0}));
}

TEST(Hermite, Map) {
    EXPECT_EQ(hermite_map(P(1, {{{2}, 1.0}})), P(1, {{{2}, 4.0}, {{0}, -2.0}}));
    EXPECT_EQ(hermite_map(MultiPoly::constant(1, 1.0)), MultiPoly::constant(1, 1.0));
    EXPECT_EQ(hermite_map(P(1, {{{2}, 1.0}, {{1}, 2.0}, {{0}, 1.0}})), P(1, {{{2}, 4.0}, {{1}, 4.0}, {{0}, -1.0}}));
    EXPECT_EQ(hermite_map(P(2, {{{1, 1}, 1.0}})), P(2, {{{1, 1}, 4.0}}));
}
