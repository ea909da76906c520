#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "stabpoly/uni.hpp"

using namespace stabpoly;
using stabpoly::testing::U;

namespace {

const Complex I{0.0, 1.0};

std::vector<Complex> sorted_roots(const UniPoly& p) {
    auto r = all_roots(p).roots;
    std::sort(r.begin(), r.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return r;
}

}  // namespace

TEST(AllRoots, Examples) {
    auto r = sorted_roots(U({-1.0, 0.0, 1.0}));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(std::abs(r[0] - Complex(-1.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r[1] - Complex(1.0)), 0.0, 1e-12);
    EXPECT_NEAR(all_roots(U({-1.0, 0.0, 1.0})).max_uhp_margin, 0.0, 1e-12);

    r = sorted_roots(U({1.0, 0.0, 1.0}));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(std::abs(r[0] + I), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r[1] - I), 0.0, 1e-12);
    EXPECT_NEAR(all_roots(U({1.0, 0.0, 1.0})).max_uhp_margin, 1.0, 1e-12);

    const RootReport lin = all_roots(U({I, 1.0}));
    ASSERT_EQ(lin.roots.size(), 1u);
    EXPECT_NEAR(lin.max_uhp_margin, -1.0, 1e-12);
}

TEST(AllRoots, ResidualCertificate) {
    // Wilkinson-style product with well separated roots.
    UniPoly p = U({1.0});
    for (int k = 1; k <= 12; ++k) p = p * U({-static_cast<double>(k), 1.0});
    const RootReport rep = all_roots(p);
    EXPECT_TRUE(rep.reliable);
    EXPECT_EQ(rep.roots.size(), 12u);
    for (double r : rep.residuals) EXPECT_LE(r, kResidualBound);
}

TEST(AllRoots, RejectsConstants) {
    EXPECT_THROW(all_roots(U({3.0})), std::invalid_argument);
    EXPECT_THROW(all_roots(UniPoly{}), std::invalid_argument);
}

TEST(InU1, Examples) {
    EXPECT_EQ(in_u1(U({-1.0, 0.0, 1.0})).status, U1Status::Member);
    const U1Result w = in_u1(U({-I, 1.0}));
    ASSERT_EQ(w.status, U1Status::NonMemberWitness);
    EXPECT_NEAR(std::abs(w.witness - I), 0.0, 1e-12);
    EXPECT_TRUE(accepts_member(in_u1(U({-1.0, 1.0, 1.0}))));
    EXPECT_EQ(in_u1(U({5.0})).status, U1Status::Member);
    EXPECT_THROW(in_u1(UniPoly{}), std::invalid_argument);
}

TEST(InU1, DoubleRootStaysOnAxis) {
    // (x - 1)^4 perturbs to a ring of radius ~eps^(1/4) without resolution.
    UniPoly p = U({1.0});
    for (int k = 0; k < 4; ++k) p = p * U({-1.0, 1.0});
    EXPECT_TRUE(accepts_member(in_u1(p)));
}

TEST(RealRooted, Examples) {
    EXPECT_TRUE(is_real_rooted(U({2.0, 3.0, 1.0})));
    EXPECT_FALSE(is_real_rooted(U({1.0, 0.0, 1.0})));
    EXPECT_TRUE(is_real_rooted(U({-1.0, 1.0, 1.0})));
    EXPECT_THROW(is_real_rooted(U({I, 1.0})), std::invalid_argument);
}

TEST(InterlaceClassify, Examples) {
    EXPECT_EQ(interlace_classify(U({-1.0, 0.0, 1.0}), U({0.0, 1.0})), InterlaceRelation::FArrowG);
    EXPECT_EQ(interlace_classify(U({-1.0, 0.0, 1.0}), U({0.0, -1.0})), InterlaceRelation::FArrowNegG);
    EXPECT_EQ(interlace_classify(U({2.0, 2.0}), U({1.0, 1.0})), InterlaceRelation::Proportional);
    // Shared root: (x-1)(x+1) against (x-1).
    EXPECT_EQ(interlace_classify(U({-1.0, 0.0, 1.0}), U({-1.0, 1.0})), InterlaceRelation::None);
    EXPECT_THROW(interlace_classify(U({1.0, 0.0, 1.0}), U({0.0, 1.0})), std::invalid_argument);
}

TEST(HBSplit, Examples) {
    HBSplit s = hb_split(U({I, 1.0}));
    EXPECT_EQ(s.real, U({0.0, 1.0}));
    EXPECT_EQ(s.imag, U({1.0}));
    EXPECT_TRUE(s.interlaces);

    s = hb_split(U({-I, 1.0}));
    EXPECT_EQ(s.real, U({0.0, 1.0}));
    EXPECT_EQ(s.imag, U({-1.0}));
    EXPECT_FALSE(s.interlaces);

    s = hb_split(U({-1.0, 0.0, 1.0}));
    EXPECT_EQ(s.real, U({-1.0, 0.0, 1.0}));
    EXPECT_TRUE(s.imag.is_zero());
    EXPECT_TRUE(s.interlaces);
}
