#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pinchknot/pinch.hpp"

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

std::vector<TorusKnot> visited(const PinchSequence& s) {
    std::vector<TorusKnot> out;
    for (const PinchStep& step : s.steps) out.push_back(step.to);
    return out;
}

}  // namespace

TEST(TorusKnot, Validation) {
    EXPECT_NO_THROW(TorusKnot(0, 1));
    EXPECT_NO_THROW(TorusKnot(1, 0));
    EXPECT_EQ(code_of([] { TorusKnot(4, 6); }), errc::invalid_knot);
    EXPECT_EQ(code_of([] { TorusKnot(0, 0); }), errc::invalid_knot);
    EXPECT_EQ(code_of([] { TorusKnot(0, 2); }), errc::invalid_knot);
    EXPECT_EQ(code_of([] { TorusKnot(-3, 2); }), errc::invalid_knot);
}

TEST(TorusKnot, UnknotAndCanonical) {
    EXPECT_TRUE(TorusKnot(0, 1).is_unknot());
    EXPECT_TRUE(TorusKnot(1, 7).is_unknot());
    EXPECT_TRUE(TorusKnot(9, 1).is_unknot());
    EXPECT_FALSE(TorusKnot(2, 3).is_unknot());
    EXPECT_EQ(TorusKnot(9, 4).canonical(), TorusKnot(4, 9));
    EXPECT_TRUE(TorusKnot(9, 4).same_knot(TorusKnot(4, 9)));
    EXPECT_NE(TorusKnot(9, 4), TorusKnot(4, 9));
}

// =============================================================================
// pinch_move
// =============================================================================

TEST(PinchMove, K1) {
    const PinchStep s = pinch_move(TorusKnot(4, 9));
    EXPECT_EQ(s.to, TorusKnot(2, 5));
    EXPECT_EQ(s.t, 3);
    EXPECT_EQ(s.h, 7);
    EXPECT_EQ(s.sign, Sign::negative);
    EXPECT_EQ(s.p_minus_2t, -2);
    EXPECT_EQ(s.q_minus_2h, -5);
}

TEST(PinchMove, K2) {
    const PinchStep s = pinch_move(TorusKnot(8, 25));
    EXPECT_EQ(s.to, TorusKnot(6, 19));
    EXPECT_EQ(s.t, 7);
    EXPECT_EQ(s.h, 22);
    EXPECT_EQ(s.sign, Sign::negative);
}

TEST(PinchMove, TrefoilUsesFallbackSign) {
    const PinchStep s = pinch_move(TorusKnot(2, 3));
    EXPECT_EQ(s.to, TorusKnot(0, 1));
    EXPECT_EQ(s.t, 1);
    EXPECT_EQ(s.h, 2);
    EXPECT_EQ(s.p_minus_2t, 0);
    EXPECT_EQ(s.q_minus_2h, -1);
    EXPECT_EQ(s.sign, Sign::negative);
}

TEST(PinchMove, SwappedOrientation) {
    const PinchStep s = pinch_move(TorusKnot(9, 4));
    EXPECT_EQ(s.to, TorusKnot(5, 2));
    EXPECT_EQ(s.t, 2);
    EXPECT_EQ(s.h, 1);
    EXPECT_EQ(s.sign, Sign::positive);
}

TEST(PinchMove, Errors) {
    EXPECT_EQ(code_of([] { pinch_move(TorusKnot(1, 5)); }), errc::cannot_pinch_unknot);
    EXPECT_EQ(code_of([] { pinch_move(TorusKnot(0, 1)); }), errc::cannot_pinch_unknot);
}

TEST(PinchMove, MatchesLinearScanOracle) {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 2'000; ++i) {
        const auto [p, q] = oracle::coprime_pair(rng, 2, 2000);
        const PinchStep s = pinch_move(TorusKnot(p, q));
        ASSERT_EQ(s.t, oracle::pinch_t_by_scan(p, q)) << p << "," << q;
        ASSERT_EQ(s.h, oracle::pinch_h_by_scan(p, q)) << p << "," << q;
        ASSERT_EQ(s.to, TorusKnot(std::abs(p - 2 * s.t), std::abs(q - 2 * s.h)));
    }
}

TEST(PinchMove, SwapSymmetry) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 5'000; ++i) {
        const auto [p, q] = oracle::coprime_pair(rng, 2, 1'000'000);
        const PinchStep a = pinch_move(TorusKnot(p, q));
        const PinchStep b = pinch_move(TorusKnot(q, p));
        ASSERT_EQ(b.to, a.to.swapped()) << p << "," << q;
        // t' = p - t and h' = q - h after swapping roles, so the raw values flip sign
        ASSERT_EQ(b.p_minus_2t, -a.q_minus_2h);
        ASSERT_EQ(b.q_minus_2h, -a.p_minus_2t);
    }
}

TEST(PinchMove, ResultIsCoprimeAndSmaller) {
    for (integer p = 2; p <= 200; ++p)
        for (integer q = 2; q <= 200; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const PinchStep s = pinch_move(TorusKnot(p, q));
            ASSERT_EQ(std::gcd(s.to.p(), s.to.q()), 1);
            ASSERT_LE(s.to.p(), p - 2);
            ASSERT_LE(s.to.q(), q - 2);
        }
}

// =============================================================================
// pinch_sequence / pinch_number
// =============================================================================

TEST(PinchSequence, K2) {
    const PinchSequence s = pinch_sequence(TorusKnot(8, 25));
    const std::vector<TorusKnot> expected{{6, 19}, {4, 13}, {2, 7}, {0, 1}};
    EXPECT_EQ(visited(s), expected);
}

TEST(PinchSequence, J3) {
    const PinchSequence s = pinch_sequence(TorusKnot(12, 25));
    const std::vector<TorusKnot> expected{{10, 21}, {8, 17}, {6, 13}, {4, 9}, {2, 5}, {0, 1}};
    EXPECT_EQ(visited(s), expected);
}

TEST(PinchSequence, UnknotIsEmpty) {
    EXPECT_TRUE(pinch_sequence(TorusKnot(1, 0)).steps.empty());
    EXPECT_EQ(pinch_sequence(TorusKnot(1, 0)).end(), TorusKnot(1, 0));
}

TEST(PinchSequence, Chains) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const auto [p, q] = oracle::coprime_pair(rng, 0, 100'000);
        const PinchSequence s = pinch_sequence(TorusKnot(p, q));
        for (std::size_t k = 0; k + 1 < s.steps.size(); ++k) ASSERT_EQ(s.steps[k].to, s.steps[k + 1].from);
        if (!s.steps.empty()) {
            ASSERT_EQ(s.steps.front().from, TorusKnot(p, q));
        }
        ASSERT_TRUE(s.end().is_unknot());
        ASSERT_EQ(pinch_sequence(TorusKnot(p, q)), s);  // deterministic
    }
}

TEST(PinchNumber, Examples) {
    EXPECT_EQ(pinch_number(TorusKnot(4, 9)), 2u);
    EXPECT_EQ(pinch_number(TorusKnot(20, 81)), 10u);
    EXPECT_EQ(pinch_number(TorusKnot(0, 1)), 0u);
}

TEST(PinchNumber, ConsecutiveTorusKnotsGrowLinearly) {
    // T(2k,2k+1) -> T(2k-2,2k-1), so the pinch number is k
    for (integer k = 1; k <= 500; ++k) ASSERT_EQ(pinch_number(TorusKnot(2 * k, 2 * k + 1)), static_cast<std::size_t>(k));
}

TEST(PinchSequence, IterationCapIsEnforced) {
    EXPECT_EQ(code_of([] { pinch_sequence(TorusKnot(8, 25), 3); }), errc::iteration_cap_exceeded);
    EXPECT_EQ(pinch_sequence(TorusKnot(8, 25), 4).pinch_number(), 4u);
}
