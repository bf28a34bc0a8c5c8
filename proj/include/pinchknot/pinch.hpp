#pragma once

/**
 * @file pinch.hpp
 * @brief Pinch moves on torus knots.
 *
 * A pinch move takes T(p,q) to T(|p-2t|, |q-2h|) where t and h are the least
 * nonnegative residues of -q^{-1} mod p and p^{-1} mod q. Iterating gives the
 * unique pinch sequence ending at an unknot; its length is the pinch number.
 *
 * The move is applied to (p,q) exactly as given. The resulting knot does not
 * depend on the order of the pair, but t, h and the sign do.
 */

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pinchknot/arith.hpp"

namespace pinchknot {

/// The torus knot T(p,q) for a coprime pair of nonnegative integers.
class TorusKnot {
public:
    constexpr TorusKnot(integer p, integer q) : p_(p), q_(q) {
        if (p < 0 || q < 0)
            throw error(errc::invalid_knot, "T(" + std::to_string(p) + "," + std::to_string(q) + ") has a negative parameter");
        if ((p == 0 && q == 0) || ext_gcd(p, q).g != 1)
            throw error(errc::invalid_knot, "T(" + std::to_string(p) + "," + std::to_string(q) + ") parameters are not coprime");
    }

    constexpr integer p() const noexcept { return p_; }
    constexpr integer q() const noexcept { return q_; }

    constexpr bool is_unknot() const noexcept { return p_ <= 1 || q_ <= 1; }

    constexpr TorusKnot swapped() const noexcept { return TorusKnot(q_, p_, unchecked{}); }
    constexpr TorusKnot canonical() const noexcept { return p_ <= q_ ? *this : swapped(); }

    /// Equality as knots: T(p,q) = T(q,p).
    constexpr bool same_knot(const TorusKnot& other) const noexcept {
        const TorusKnot a = canonical(), b = other.canonical();
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

    /// Equality as ordered pairs.
    friend constexpr bool operator==(const TorusKnot&, const TorusKnot&) = default;

private:
    struct unchecked {};
    constexpr TorusKnot(integer p, integer q, unchecked) noexcept : p_(p), q_(q) {}

    integer p_;
    integer q_;
};

inline std::string to_string(const TorusKnot& k) {
    return "(" + std::to_string(k.p()) + "," + std::to_string(k.q()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const TorusKnot& k) { return os << to_string(k); }

enum class Sign { positive, negative };

constexpr char sign_char(Sign s) noexcept { return s == Sign::positive ? '+' : '-'; }

struct PinchStep {
    TorusKnot from;
    TorusKnot to;
    integer t;
    integer h;
    Sign sign;
    // raw values behind the sign, kept for auditing
    integer p_minus_2t;
    integer q_minus_2h;

    friend bool operator==(const PinchStep&, const PinchStep&) = default;
};

struct PinchSequence {
    TorusKnot start;
    std::vector<PinchStep> steps;

    std::size_t pinch_number() const noexcept { return steps.size(); }
    /// Knot reached after the last step; the start itself when no steps.
    TorusKnot end() const { return steps.empty() ? start : steps.back().to; }

    friend bool operator==(const PinchSequence&, const PinchSequence&) = default;
};

inline PinchStep pinch_move(const TorusKnot& k) {
    const integer p = k.p(), q = k.q();
    if (k.is_unknot()) throw error(errc::cannot_pinch_unknot, "T" + to_string(k) + " is already unknotted");

    // one extended gcd gives both inverses: p*x + q*y = 1
    const bezout b = ext_gcd(p, q);
    const integer q_inv_mod_p = detail::mod_floor(b.y, p);
    const integer t = q_inv_mod_p == 0 ? 0 : p - q_inv_mod_p;
    const integer h = detail::mod_floor(b.x, q);

    const integer dp = p - 2 * t;
    const integer dq = q - 2 * h;
    if (dp == 0 && dq == 0) throw std::logic_error("pinch move with p-2t = q-2h = 0 on a coprime pair");

    const Sign sign = (dp != 0 ? dp : dq) > 0 ? Sign::positive : Sign::negative;
    return PinchStep{k, TorusKnot(dp < 0 ? -dp : dp, dq < 0 ? -dq : dq), t, h, sign, dp, dq};
}

/// Every pinch lowers both coordinates by at least 2 (1 <= t <= p-1 and
/// 1 <= h <= q-1), so no sequence is longer than floor(min(p,q)/2).
constexpr std::size_t pinch_iteration_cap(const TorusKnot& k) noexcept {
    return static_cast<std::size_t>(std::min(k.p(), k.q()) / 2) + 1;
}

/// Pinch sequence with an explicit step budget; throws iteration_cap_exceeded
/// if the unknot is not reached within max_steps moves.
inline PinchSequence pinch_sequence(const TorusKnot& k, std::size_t max_steps) {
    PinchSequence seq{k, {}};
    TorusKnot current = k;
    while (!current.is_unknot()) {
        if (seq.steps.size() >= max_steps)
            throw error(errc::iteration_cap_exceeded,
                        "T" + to_string(k) + " not unknotted after " + std::to_string(max_steps) + " pinch moves");
        seq.steps.push_back(pinch_move(current));
        current = seq.steps.back().to;
    }
    return seq;
}

inline PinchSequence pinch_sequence(const TorusKnot& k) { return pinch_sequence(k, pinch_iteration_cap(k)); }

inline std::size_t pinch_number(const TorusKnot& k) { return pinch_sequence(k).pinch_number(); }

}  // namespace pinchknot
