#pragma once

/**
 * @file families.hpp
 * @brief The torus knot families K_n = T(4n,(2n+1)^2) and J_n = T(4n,(2n-1)^2).
 *
 * Both have pinch number 2n. Their pinch sequences are given in closed form:
 * in (odd, even) order the k-th knot is
 *
 *     ((2n+e)^2 - 2k(n+e), 4n - 2k) = ((4n-2k)(n+e) + 1, 4n - 2k)
 *
 * with e = +1 for K and e = -1 for J. Four pinches take J_n to K_{n-2}, and
 * no pinch sequence from one K_m passes through another K_n.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "pinchknot/arith.hpp"
#include "pinchknot/pinch.hpp"

namespace pinchknot {

enum class Family { K, J };

constexpr char family_char(Family f) noexcept { return f == Family::K ? 'K' : 'J'; }

/// +1 for K, -1 for J.
constexpr integer family_eps(Family f) noexcept { return f == Family::K ? 1 : -1; }

struct FamilyId {
    Family family;
    integer n;

    constexpr FamilyId(Family f, integer n_) : family(f), n(n_) {
        if (n_ < 1) throw error(errc::invalid_family, std::string(1, family_char(f)) + "_" + std::to_string(n_) + ": n must be positive");
    }

    /// J_1 = T(4,1) is the only unknotted member.
    constexpr bool is_trivial() const noexcept { return family == Family::J && n == 1; }

    friend constexpr bool operator==(const FamilyId&, const FamilyId&) = default;
};

inline std::string to_string(const FamilyId& id) { return std::string(1, family_char(id.family)) + "_" + std::to_string(id.n); }

/// (4n, (2n+1)^2) for K, (4n, (2n-1)^2) for J.
inline TorusKnot family_knot(const FamilyId& id) {
    const wide odd = 2 * static_cast<wide>(id.n) + family_eps(id.family);
    return TorusKnot(detail::narrow(4 * static_cast<wide>(id.n)), detail::narrow(odd * odd));
}

/// K_0 is taken to be T(0,1) so that J_2 -> K_0 reads uniformly.
inline TorusKnot k_family_or_unknot(integer n) {
    if (n == 0) return TorusKnot(0, 1);
    return family_knot(FamilyId(Family::K, n));
}

/// The k-th knot of the family's pinch sequence in (odd, even) order.
inline TorusKnot closed_form_step(integer n, integer eps, integer k) {
    if (n < 1) throw error(errc::invalid_family, "n must be positive");
    if (eps != 1 && eps != -1) throw error(errc::domain, "eps must be +1 or -1");
    if (k < 0 || k > 2 * n) throw error(errc::out_of_range, "k=" + std::to_string(k) + " outside [0, 2n]");
    const wide odd = 2 * static_cast<wide>(n) + eps;
    return TorusKnot(detail::narrow(odd * odd - 2 * static_cast<wide>(k) * (n + eps)), detail::narrow(4 * static_cast<wide>(n) - 2 * k));
}

/// The knots reached by the first four pinch moves on J_n.
inline std::vector<TorusKnot> four_pinches_from_J(integer n) {
    if (n < 2) throw error(errc::invalid_family, "four pinches need J_n with n >= 2");
    std::vector<TorusKnot> chain;
    TorusKnot current = family_knot(FamilyId(Family::J, n));
    for (int i = 0; i < 4; ++i) {
        current = pinch_move(current).to;
        chain.push_back(current);
    }
    return chain;
}

/// Four pinches on J_n land on K_{n-2}.
inline bool verify_corollary_J_to_K(integer n) {
    return four_pinches_from_J(n).back().same_knot(k_family_or_unknot(n - 2));
}

struct IndependenceViolation {
    integer m;           // family member whose sequence was walked
    integer n;           // family member that was hit
    std::size_t step;    // index of the step whose target equals K_n

    friend bool operator==(const IndependenceViolation&, const IndependenceViolation&) = default;
};

/// Walks the pinch sequence of every K_m, m <= max_n, and reports each
/// intermediate knot that coincides with some other K_n, n <= max_n.
inline std::vector<IndependenceViolation> verify_K_independence(integer max_n) {
    std::vector<TorusKnot> members;
    for (integer n = 1; n <= max_n; ++n) members.push_back(family_knot(FamilyId(Family::K, n)).canonical());

    std::vector<IndependenceViolation> out;
    for (integer m = 1; m <= max_n; ++m) {
        const PinchSequence seq = pinch_sequence(members[static_cast<std::size_t>(m - 1)]);
        for (std::size_t i = 0; i < seq.steps.size(); ++i) {
            const TorusKnot reached = seq.steps[i].to.canonical();
            for (integer n = 1; n <= max_n; ++n)
                if (n != m && reached == members[static_cast<std::size_t>(n - 1)]) out.push_back({m, n, i});
        }
    }
    return out;
}

}  // namespace pinchknot
