#include <numeric>

#include "helpers.hpp"

using namespace stabpoly;
using stabpoly::testing::Near;
using stabpoly::testing::P;

namespace {

const Complex I{0.0, 1.0};

MultiPoly x1x2_minus_1() { return P(2, {{{1, 1}, 1.0}, {{0, 0}, -1.0}}); }

}  // namespace

TEST(Arithmetic, AddCancels) {
    const MultiPoly f = P(1, {{{1}, 1.0}, {{0}, 1.0}}) + P(1, {{{1}, -1.0}});
    EXPECT_EQ(f, P(1, {{{0}, 1.0}}));
    EXPECT_EQ(f.size(), 1u);
    EXPECT_EQ(x1x2_minus_1() + MultiPoly::constant(2, 1.0), P(2, {{{1, 1}, 1.0}}));
}

TEST(Arithmetic, AddZeroIsIdentity) {
    const MultiPoly f = P(3, {{{2, 0, 1}, {1.5, -2.0}}, {{0, 1, 0}, 3.0}});
    EXPECT_EQ(f + MultiPoly(3), f);
}

TEST(Arithmetic, Multiply) {
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    const MultiPoly one = MultiPoly::constant(2, 1.0);
    EXPECT_EQ((x + one) * (x - one), P(2, {{{2, 0}, 1.0}, {{0, 0}, -1.0}}));
    EXPECT_EQ((one + x) * (one + y), P(2, {{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 1.0}}));
    EXPECT_EQ((x + y) * (x + y), P(2, {{{2, 0}, 1.0}, {{1, 1}, 2.0}, {{0, 2}, 1.0}}));
}

TEST(Arithmetic, MismatchedVariableCountThrows) {
    EXPECT_THROW(MultiPoly::variable(1, 0) + MultiPoly::variable(2, 0), DimensionMismatch);
    EXPECT_THROW(MultiPoly::variable(1, 0) * MultiPoly::variable(2, 0), DimensionMismatch);
}

TEST(Arithmetic, Degrees) {
    EXPECT_EQ(MultiPoly(2).degree(), -1);
    EXPECT_EQ(x1x2_minus_1().degree(), 2);
    EXPECT_EQ(x1x2_minus_1().degree_in(0), 1);
}

TEST(Derivative, Examples) {
    EXPECT_EQ(partial_derivative(P(1, {{{2}, 1.0}, {{0}, -1.0}}), 0), P(1, {{{1}, 2.0}}));
    EXPECT_EQ(partial_derivative(x1x2_minus_1(), 0), P(2, {{{0, 1}, 1.0}}));
    EXPECT_TRUE(partial_derivative(MultiPoly::constant(1, 7.0), 0).is_zero());
}

TEST(SubstituteAffine, Examples) {
    const MultiPoly sum = P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}});
    const std::vector<Complex> ii{I, I};
    const std::vector<double> ones{1.0, 1.0};
    EXPECT_TRUE(Near(substitute_affine(sum, ii, ones), P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, 2.0 * I}})));

    const std::vector<Complex> one{1.0};
    const std::vector<double> two{2.0};
    EXPECT_TRUE(Near(substitute_affine(P(1, {{{2}, 1.0}}), one, two), P(1, {{{2}, 4.0}, {{1}, 4.0}, {{0}, 1.0}})));

    const std::vector<Complex> zeros{0.0, 0.0};
    const std::vector<double> s23{2.0, 3.0};
    EXPECT_TRUE(Near(substitute_affine(x1x2_minus_1(), zeros, s23), P(2, {{{1, 1}, 6.0}, {{0, 0}, -1.0}})));
}

TEST(SubstituteAffine, RejectsBadArguments) {
    const std::vector<Complex> down{Complex(0.0, -1.0)};
    const std::vector<double> one{1.0}, zero{0.0};
    const std::vector<Complex> up{0.0};
    const MultiPoly f = P(1, {{{1}, 1.0}});
    EXPECT_THROW(substitute_affine(f, down, one), std::invalid_argument);
    EXPECT_THROW(substitute_affine(f, up, zero), std::invalid_argument);
}

TEST(Specialize, Examples) {
    EXPECT_TRUE(Near(specialize(x1x2_minus_1(), 0, I), P(1, {{{1}, I}, {{0}, -1.0}})));
    EXPECT_TRUE(specialize(P(2, {{{1, 1}, 1.0}}), 0, 0.0).is_zero());
    const MultiPoly f = P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, 1.0}});
    EXPECT_TRUE(Near(specialize(f, 1, 2.0), P(1, {{{1}, 1.0}, {{0}, 3.0}})));
}

TEST(MergeVariables, Examples) {
    EXPECT_EQ(merge_variables(x1x2_minus_1(), 0, 1), P(1, {{{2}, 1.0}, {{0}, -1.0}}));
    EXPECT_EQ(merge_variables(P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}}), 0, 1), P(1, {{{1}, 2.0}}));
    const MultiPoly diff = merge_variables(P(2, {{{1, 0}, 1.0}, {{0, 1}, -1.0}}), 0, 1);
    EXPECT_TRUE(diff.is_zero());
    EXPECT_EQ(diff.nvars(), 1);
}

TEST(RestrictLine, Examples) {
    const AffineLine diag{{0.0, 0.0}, {1.0, 1.0}};
    EXPECT_EQ(restrict_line(P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}}), diag), stabpoly::testing::U({0.0, 2.0}));
    EXPECT_EQ(restrict_line(x1x2_minus_1(), diag), stabpoly::testing::U({-1.0, 0.0, 1.0}));
    const AffineLine shifted{{1.0, 0.0}, {1.0, 1.0}};
    EXPECT_EQ(restrict_line(x1x2_minus_1(), shifted), stabpoly::testing::U({-1.0, 1.0, 1.0}));
}

TEST(RestrictLine, RejectsNonPositiveDirection) {
    const AffineLine bad{{0.0, 0.0}, {1.0, 0.0}};
    EXPECT_THROW(restrict_line(x1x2_minus_1(), bad), std::invalid_argument);
}

TEST(ReverseVar, Examples) {
    const MultiPoly sum = P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}});
    EXPECT_EQ(reverse_var(sum, 1), P(2, {{{0, 0}, 1.0}, {{1, 1}, -1.0}}));
    EXPECT_EQ(reverse_var(P(1, {{{2}, 1.0}, {{0}, -1.0}}), 0), P(1, {{{0}, 1.0}, {{2}, -1.0}}));
    EXPECT_EQ(reverse_var(P(2, {{{0, 1}, 1.0}}), 1), P(2, {{{0, 0}, 1.0}}));
}

TEST(FullReverse, Examples) {
    EXPECT_EQ(full_reverse(x1x2_minus_1()), P(2, {{{0, 0}, 1.0}, {{1, 1}, -1.0}}));
    EXPECT_EQ(full_reverse(P(1, {{{2}, 1.0}, {{1}, 3.0}, {{0}, 2.0}})), P(1, {{{2}, 2.0}, {{1}, 3.0}, {{0}, 1.0}}));
    const MultiPoly sum = P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}});
    EXPECT_EQ(full_reverse(sum), sum);
}

TEST(TopForm, Examples) {
    EXPECT_EQ(top_form(x1x2_minus_1()), P(2, {{{1, 1}, 1.0}}));
    EXPECT_EQ(top_form(P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, 1.0}})), P(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}}));
    const MultiPoly sq = P(2, {{{2, 0}, 1.0}, {{1, 1}, 2.0}, {{0, 2}, 1.0}});
    EXPECT_EQ(top_form(sq + P(2, {{{1, 0}, 1.0}})), sq);
}

TEST(CoefficientSlice, Examples) {
    const MultiPoly f = P(1, {{{2}, 1.0}, {{0}, -1.0}});
    EXPECT_EQ(coefficient_slice(f, 0, 0), MultiPoly::constant(0, -1.0));
    EXPECT_TRUE(coefficient_slice(f, 0, 1).is_zero());
    EXPECT_EQ(coefficient_slice(f, 0, 2), MultiPoly::constant(0, 1.0));
    EXPECT_EQ(coefficient_slice(x1x2_minus_1(), 0, 1), P(1, {{{1}, 1.0}}));
    const MultiPoly g = P(2, {{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 1.0}});
    EXPECT_EQ(coefficient_slice(g, 0, 0), P(1, {{{0}, 1.0}, {{1}, 1.0}}));
}

TEST(Evaluate, MatchesDirectSum) {
    const MultiPoly f = P(2, {{{2, 1}, {1.0, 2.0}}, {{0, 3}, -0.5}, {{0, 0}, 4.0}});
    const std::vector<Complex> pt{Complex(0.3, 1.1), Complex(-2.0, 0.4)};
    const Complex x = pt[0], y = pt[1];
    const Complex want = Complex(1.0, 2.0) * x * x * y - 0.5 * y * y * y + 4.0;
    EXPECT_NEAR(std::abs(f.evaluate(pt) - want), 0.0, 1e-12);
}
