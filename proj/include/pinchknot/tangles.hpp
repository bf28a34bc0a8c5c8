#pragma once

/**
 * @file tangles.hpp
 * @brief Rational tangle fractions, the SL(2,Z) action on them, and 2-bridge
 *        knots as unions of two rational tangles.
 *
 * A matrix [[a,b],[c,d]] sends the slope p/q to (ap+bq)/(cp+dq). A 2-bridge
 * knot tau(t1) U tau(t2) is normalized by a matrix sending t1 to 1/0; what
 * remains is the denominator closure of the tangle with slope M*t2.
 */

#include <algorithm>
#include <ostream>
#include <string>

#include "pinchknot/arith.hpp"
#include "pinchknot/families.hpp"

namespace pinchknot {

/// 2x2 integer matrix of determinant 1, row-major.
class MatSL2 {
public:
    constexpr MatSL2(integer a, integer b, integer c, integer d) : a_(a), b_(b), c_(c), d_(d) {
        if (static_cast<wide>(a) * d - static_cast<wide>(b) * c != 1)
            throw error(errc::invalid_matrix, "determinant is not 1");
    }

    static constexpr MatSL2 identity() { return MatSL2(1, 0, 0, 1); }

    constexpr integer a() const noexcept { return a_; }
    constexpr integer b() const noexcept { return b_; }
    constexpr integer c() const noexcept { return c_; }
    constexpr integer d() const noexcept { return d_; }

    friend constexpr MatSL2 operator*(const MatSL2& l, const MatSL2& r) {
        auto dot = [](integer x0, integer y0, integer x1, integer y1) {
            return detail::narrow(static_cast<wide>(x0) * y0 + static_cast<wide>(x1) * y1);
        };
        return MatSL2(dot(l.a_, r.a_, l.b_, r.c_), dot(l.a_, r.b_, l.b_, r.d_),
                      dot(l.c_, r.a_, l.d_, r.c_), dot(l.c_, r.b_, l.d_, r.d_));
    }

    friend constexpr bool operator==(const MatSL2&, const MatSL2&) = default;

private:
    integer a_, b_, c_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const MatSL2& m) {
    return os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << "," << m.d() << "]]";
}

inline ReducedFraction mat_apply(const MatSL2& m, const ReducedFraction& f) {
    const integer num = detail::narrow(static_cast<wide>(m.a()) * f.num() + static_cast<wide>(m.b()) * f.den());
    const integer den = detail::narrow(static_cast<wide>(m.c()) * f.num() + static_cast<wide>(m.d()) * f.den());
    return ReducedFraction(num, den);
}

/// A matrix of determinant 1 taking the slope f to 1/0.
inline MatSL2 matrix_to_infinity(const ReducedFraction& f) {
    const bezout b = ext_gcd(f.num(), f.den());
    return MatSL2(b.x, b.y, -f.den(), f.num());
}

struct TwoBridgeKnot {
    ReducedFraction t1;
    ReducedFraction t2;
    /// Slope of t2 after t1 is moved to 1/0, numerator taken as the least
    /// absolute residue modulo the denominator.
    ReducedFraction normalized;

    friend bool operator==(const TwoBridgeKnot&, const TwoBridgeKnot&) = default;
};

namespace detail {

/// r = num mod den in (-den/2, den/2], with the tie den/2 sent to -den/2.
constexpr integer least_abs_residue(integer num, integer den) {
    integer r = mod_floor(num, den);
    if (2 * static_cast<wide>(r) >= den) r -= den;
    return r;
}

}  // namespace detail

inline TwoBridgeKnot two_bridge_normalize(const ReducedFraction& t1, const ReducedFraction& t2) {
    if (t1 == t2) throw error(errc::degenerate_tangles, "equal tangle slopes " + to_string(t1) + " close up to a link");
    const ReducedFraction moved = mat_apply(matrix_to_infinity(t1), t2);
    // moved is finite because t1 != t2; quotient by the stabilizer of 1/0
    return {t1, t2, ReducedFraction(detail::least_abs_residue(moved.num(), moved.den()), moved.den())};
}

/// The 2-bridge knot left after the 2n-1 band surgeries on K_n or J_n:
/// tau(1/(2m+1)) U tau(2n/(2n-1)) with m = n+1 for K and m = n-1 for J.
inline TwoBridgeKnot surgery_result_knot(const FamilyId& id) {
    if (id.is_trivial()) throw error(errc::invalid_family, "J_1 is unknotted");
    const integer m = id.n + family_eps(id.family);
    const integer n = id.n;
    return two_bridge_normalize(ReducedFraction(1, detail::narrow(2 * static_cast<wide>(m) + 1)),
                                ReducedFraction(detail::narrow(2 * static_cast<wide>(n)), detail::narrow(2 * static_cast<wide>(n) - 1)));
}

inline integer two_bridge_determinant(const TwoBridgeKnot& k) {
    if (k.normalized.is_infinite()) throw error(errc::domain, "normalized slope 1/0 has no determinant");
    return k.normalized.den();
}

/// Schubert: S(a,b) and S(a,b') are isotopic iff b' = b^{+-1} (mod a).
inline bool same_two_bridge_knot(const TwoBridgeKnot& x, const TwoBridgeKnot& y) {
    const integer a = two_bridge_determinant(x);
    if (a != two_bridge_determinant(y)) return false;
    if (a == 1) return true;
    const integer b = detail::mod_floor(x.normalized.num(), a);
    const integer b2 = detail::mod_floor(y.normalized.num(), a);
    return b == b2 || mod_inverse_smallest(b, a) == b2;
}

/// True for two-entry expansions [k+2, k] up to reversal and mirror, k >= 2.
inline bool is_slice_family(const EvenCF& cf) {
    if (cf.size() != 2) return false;
    const integer x = cf[0], y = cf[1];
    if ((x > 0) != (y > 0)) return false;
    const integer lo = std::min(detail::checked_abs(x), detail::checked_abs(y));
    const integer hi = std::max(detail::checked_abs(x), detail::checked_abs(y));
    return hi - lo == 2 && lo >= 2 && lo % 2 == 0;
}

}  // namespace pinchknot
