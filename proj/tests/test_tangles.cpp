#include <gtest/gtest.h>

#include <random>

#include "pinchknot/tangles.hpp"

using namespace pinchknot;

namespace {

errc code_of(auto&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected pinchknot::error";
    return errc::domain;
}

MatSL2 random_sl2(std::mt19937_64& rng) {
    // products of the elementary generators [[1,k],[0,1]] and [[1,0],[k,1]]
    std::uniform_int_distribution<integer> k(-4, 4), len(1, 6);
    MatSL2 m = MatSL2::identity();
    for (integer i = len(rng); i > 0; --i) {
        m = m * MatSL2(1, k(rng), 0, 1);
        m = m * MatSL2(1, 0, k(rng), 1);
    }
    return m;
}

}  // namespace

TEST(MatSL2, DeterminantEnforced) {
    EXPECT_NO_THROW(MatSL2(1, 0, -7, 1));
    EXPECT_EQ(code_of([] { MatSL2(2, 0, 0, 1); }), errc::invalid_matrix);
    EXPECT_EQ(code_of([] { MatSL2(0, 1, 1, 0); }), errc::invalid_matrix);  // det -1
}

TEST(MatApply, Examples) {
    const MatSL2 m(1, 0, -7, 1);
    EXPECT_EQ(mat_apply(m, ReducedFraction(1, 7)), ReducedFraction::infinity());
    EXPECT_EQ(mat_apply(m, ReducedFraction(4, 3)), ReducedFraction(4, -25));
    EXPECT_EQ(mat_apply(MatSL2::identity(), ReducedFraction(-5, 12)), ReducedFraction(-5, 12));
    EXPECT_EQ(mat_apply(MatSL2(0, -1, 1, 0), ReducedFraction::infinity()), ReducedFraction(0, 1));
}

TEST(MatApply, CompositionLaw) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<integer> v(-50, 50);
    for (int i = 0; i < 5'000; ++i) {
        const MatSL2 a = random_sl2(rng), b = random_sl2(rng);
        integer n = v(rng), d = v(rng);
        if (n == 0 && d == 0) d = 1;
        const ReducedFraction f(n, d);
        ASSERT_EQ(mat_apply(a * b, f), mat_apply(a, mat_apply(b, f)));
    }
}

TEST(MatrixToInfinity, SendsSlopeToInfinity) {
    for (integer n = -30; n <= 30; ++n)
        for (integer d = 0; d <= 30; ++d) {
            if (n == 0 && d == 0) continue;
            const ReducedFraction f(n, d);
            ASSERT_EQ(mat_apply(matrix_to_infinity(f), f), ReducedFraction::infinity());
        }
    EXPECT_EQ(matrix_to_infinity(ReducedFraction(1, 5)), MatSL2(1, 0, -5, 1));
}

TEST(TwoBridge, Examples) {
    EXPECT_EQ(two_bridge_normalize(ReducedFraction(1, 5), ReducedFraction(2, 1)).normalized, ReducedFraction(2, -9));
    EXPECT_EQ(two_bridge_normalize(ReducedFraction(1, 7), ReducedFraction(4, 3)).normalized, ReducedFraction(4, -25));
    EXPECT_EQ(two_bridge_normalize(ReducedFraction::infinity(), ReducedFraction(2, -9)).normalized, ReducedFraction(-2, 9));
    // residue normalization: 7/9 -> -2/9
    EXPECT_EQ(two_bridge_normalize(ReducedFraction::infinity(), ReducedFraction(7, 9)).normalized, ReducedFraction(-2, 9));
    // tie goes negative: 5/2 -> 1/2 -> -1/2
    EXPECT_EQ(two_bridge_normalize(ReducedFraction::infinity(), ReducedFraction(5, 2)).normalized, ReducedFraction(-1, 2));
}

TEST(TwoBridge, EqualSlopesAreDegenerate) {
    EXPECT_EQ(code_of([] { two_bridge_normalize(ReducedFraction(1, 5), ReducedFraction(2, 10)); }), errc::degenerate_tangles);
}

TEST(TwoBridge, DeterminantIsInvariantUnderChoiceOfMatrix) {
    // any other matrix sending t1 to 1/0 differs by a stabilizer element
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<integer> v(-40, 40), shift(-10, 10);
    for (int i = 0; i < 2'000; ++i) {
        integer n1 = v(rng), d1 = v(rng), n2 = v(rng), d2 = v(rng);
        if ((n1 == 0 && d1 == 0) || (n2 == 0 && d2 == 0)) continue;
        const ReducedFraction t1(n1, d1), t2(n2, d2);
        if (t1 == t2) continue;
        const TwoBridgeKnot k = two_bridge_normalize(t1, t2);
        const MatSL2 other = MatSL2(1, shift(rng), 0, 1) * matrix_to_infinity(t1);
        const ReducedFraction alt = mat_apply(other, t2);
        ASSERT_EQ(alt.den(), two_bridge_determinant(k));
        ASSERT_EQ(detail::least_abs_residue(alt.num(), alt.den()), k.normalized.num());
    }
}

TEST(SurgeryResult, FamilyExamples) {
    const TwoBridgeKnot k1 = surgery_result_knot(FamilyId(Family::K, 1));
    EXPECT_EQ(k1.t1, ReducedFraction(1, 5));
    EXPECT_EQ(k1.t2, ReducedFraction(2, 1));
    EXPECT_EQ(k1.normalized, ReducedFraction(2, -9));
    EXPECT_EQ(cf_even_expand(k1.normalized), EvenCF({-4, -2}));
    EXPECT_EQ(two_bridge_determinant(k1), 9);

    const TwoBridgeKnot k2 = surgery_result_knot(FamilyId(Family::K, 2));
    EXPECT_EQ(k2.normalized, ReducedFraction(4, -25));
    EXPECT_EQ(cf_even_expand(k2.normalized), EvenCF({-6, -4}));
    EXPECT_EQ(two_bridge_determinant(k2), 25);

    const TwoBridgeKnot j2 = surgery_result_knot(FamilyId(Family::J, 2));
    EXPECT_EQ(j2.normalized, ReducedFraction(4, -9));
    EXPECT_EQ(cf_even_expand(j2.normalized), EvenCF({-2, -4}));
    EXPECT_EQ(two_bridge_determinant(j2), 9);

    EXPECT_EQ(code_of([] { surgery_result_knot(FamilyId(Family::J, 1)); }), errc::invalid_family);
}

TEST(SurgeryResult, ClosedFormOverRange) {
    for (integer n = 1; n <= 200; ++n)
        for (Family f : {Family::K, Family::J}) {
            if (f == Family::J && n == 1) continue;
            const integer e = family_eps(f);
            const TwoBridgeKnot k = surgery_result_knot(FamilyId(f, n));
            ASSERT_EQ(k.normalized, ReducedFraction(2 * n, -4 * n * (n + e) - 1));
            ASSERT_EQ(two_bridge_determinant(k), (2 * n + e) * (2 * n + e));
            const EvenCF cf = cf_even_expand(k.normalized);
            ASSERT_EQ(cf, EvenCF({-(2 * n + 2 * e), -2 * n}));
            ASSERT_TRUE(is_slice_family(cf));
        }
}

TEST(SliceFamily, Recognition) {
    EXPECT_TRUE(is_slice_family(EvenCF({-4, -2})));
    EXPECT_TRUE(is_slice_family(EvenCF({-6, -4})));
    EXPECT_TRUE(is_slice_family(EvenCF({4, 6})));
    EXPECT_TRUE(is_slice_family(EvenCF({-2, -4})));
    EXPECT_FALSE(is_slice_family(EvenCF({-4, -4})));
    EXPECT_FALSE(is_slice_family(EvenCF({-4, 2})));
    EXPECT_FALSE(is_slice_family(EvenCF({-4, -2, -2})));
    EXPECT_FALSE(is_slice_family(EvenCF({-4})));
    EXPECT_FALSE(is_slice_family(EvenCF({-8, -4})));
}

TEST(TwoBridge, SchubertEquivalence) {
    const TwoBridgeKnot a = two_bridge_normalize(ReducedFraction::infinity(), ReducedFraction(2, 9));
    const TwoBridgeKnot b = two_bridge_normalize(ReducedFraction::infinity(), ReducedFraction(5, 9));  // 2*5 = 1 mod 9
    const TwoBridgeKnot c = two_bridge_normalize(ReducedFraction::infinity(), ReducedFraction(4, 9));
    EXPECT_TRUE(same_two_bridge_knot(a, b));
    EXPECT_TRUE(same_two_bridge_knot(a, a));
    EXPECT_FALSE(same_two_bridge_knot(a, c));
    EXPECT_FALSE(same_two_bridge_knot(a, two_bridge_normalize(ReducedFraction::infinity(), ReducedFraction(2, 25))));
}
