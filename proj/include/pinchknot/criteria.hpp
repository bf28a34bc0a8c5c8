#pragma once

/**
 * @file criteria.hpp
 * @brief Sign sequences of pinch moves, the Jabuka-Van Cott sign-count
 *        criterion, and the assembled counterexample report for K_n and J_n.
 *
 * For p even and q odd, nu - sigma/2 of T(p,q) equals (pinch number - 1)
 * exactly when one move in the pinch sequence has negative sign. Only that
 * combinatorial verdict is computed here; nu and sigma themselves are not.
 */

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pinchknot/families.hpp"
#include "pinchknot/pinch.hpp"
#include "pinchknot/tangles.hpp"

namespace pinchknot {

struct SignSequence {
    TorusKnot knot;
    std::vector<Sign> signs;
    std::size_t negative_count = 0;
};

inline SignSequence sign_sequence(const TorusKnot& k) {
    SignSequence out{k, {}, 0};
    for (const PinchStep& s : pinch_sequence(k).steps) {
        out.signs.push_back(s.sign);
        if (s.sign == Sign::negative) ++out.negative_count;
    }
    return out;
}

struct JvcVerdict {
    std::size_t negative_count;
    bool equals_pinch_minus_one;

    friend bool operator==(const JvcVerdict&, const JvcVerdict&) = default;
};

/// Requires p, q > 1 with p even and q odd; the pair is never reordered.
inline JvcVerdict jvc_criterion(const TorusKnot& k) {
    if (k.p() <= 1 || k.q() <= 1 || k.p() % 2 != 0 || k.q() % 2 == 0)
        throw error(errc::criterion_not_applicable, "T" + to_string(k) + " needs p, q > 1 with p even and q odd");
    const std::size_t negatives = sign_sequence(k).negative_count;
    return {negatives, negatives == 1};
}

struct CounterexampleReport {
    FamilyId id;
    TorusKnot knot;
    std::size_t pinch_number;
    std::size_t band_count;
    TwoBridgeKnot slice_knot;
    EvenCF slice_cf;
    bool slice_recognized;
    integer determinant;
    JvcVerdict jvc;
};

namespace detail {

inline bool is_perfect_square(integer v) {
    if (v < 0) return false;
    auto r = static_cast<integer>(std::sqrt(static_cast<double>(v)));
    while (static_cast<wide>(r) * r > v) --r;
    while (static_cast<wide>(r + 1) * (r + 1) <= v) ++r;
    return static_cast<wide>(r) * r == v;
}

}  // namespace detail

/// Assembles every computable claim about a family member and throws
/// theorem_violation if any of them fails.
inline CounterexampleReport counterexample_report(const FamilyId& id) {
    if (id.family == Family::J && id.n < 2) throw error(errc::invalid_family, "J_n needs n >= 2");

    const TorusKnot knot = family_knot(id);
    const std::size_t pinches = pinch_number(knot);
    const TwoBridgeKnot slice = surgery_result_knot(id);
    const EvenCF cf = cf_even_expand(slice.normalized);
    const integer det = two_bridge_determinant(slice);
    CounterexampleReport r{id, knot, pinches, pinches == 0 ? 0 : pinches - 1, slice, cf, is_slice_family(cf), det, jvc_criterion(knot)};

    auto fail = [&](const std::string& what) { throw error(errc::theorem_violation, to_string(id) + ": " + what); };
    const auto two_n = static_cast<std::size_t>(2 * id.n);
    if (r.pinch_number != two_n) fail("pinch number " + std::to_string(r.pinch_number) + " != 2n");
    if (r.band_count != two_n - 1) fail("band count != 2n-1");
    const integer eps = family_eps(id.family);
    if (cf != EvenCF({-(2 * id.n + 2 * eps), -2 * id.n})) fail("slice continued fraction " + to_string(cf));
    if (!r.slice_recognized) fail("slice knot not in the [k+2,k] family");
    if (!detail::is_perfect_square(det)) fail("determinant " + std::to_string(det) + " is not a square");
    if (r.jvc.equals_pinch_minus_one) fail("sign criterion says nu - sigma/2 = pinch number - 1");
    return r;
}

}  // namespace pinchknot
