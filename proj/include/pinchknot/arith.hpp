#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer and rational primitives.
 *
 * Values are 64-bit; every product is formed in 128 bits and narrowed with
 * a range check, so nothing wraps silently.
 *
 * Continued fractions use the reciprocal-first convention
 *
 *     [a1, a2, ..., ak] = 1/(a1 + 1/(a2 + ... + 1/ak))
 *
 * which is how the all-even expansions of the 2-bridge slice knots are
 * written, e.g. -2/9 = [-4, -2].
 */

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pinchknot/error.hpp"

namespace pinchknot {

using integer = std::int64_t;
using wide = __int128;

namespace detail {

constexpr integer narrow(wide v) {
    if (v > std::numeric_limits<integer>::max() || v < -std::numeric_limits<integer>::max())
        throw error(errc::overflow, "value does not fit in 64 bits");
    return static_cast<integer>(v);
}

constexpr integer checked_abs(integer v) {
    if (v == std::numeric_limits<integer>::min())
        throw error(errc::overflow, "magnitude of INT64_MIN is not representable");
    return v < 0 ? -v : v;
}

constexpr integer floor_div(wide a, wide b) {
    wide q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return narrow(q);
}

constexpr integer mod_floor(integer a, integer m) {
    integer r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace detail

struct bezout {
    integer g;
    integer x;
    integer y;

    friend bool operator==(const bezout&, const bezout&) = default;
};

/// g = gcd(|a|,|b|) > 0 with a*x + b*y = g.
constexpr bezout ext_gcd(integer a, integer b) {
    if (a == 0 && b == 0) throw error(errc::undefined_gcd, "gcd(0, 0) is undefined");
    integer r0 = detail::checked_abs(a), r1 = detail::checked_abs(b);
    integer x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        const integer q = r0 / r1;
        integer t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    return {r0, a < 0 ? -x0 : x0, b < 0 ? -y0 : y0};
}

/// The unique u in [0, m) with a*u = 1 (mod m). Returns 0 when m == 1.
constexpr integer mod_inverse_smallest(integer a, integer m) {
    if (m < 1) throw error(errc::domain, "modulus must be positive");
    if (m == 1) return 0;
    const bezout r = ext_gcd(detail::mod_floor(a, m), m);
    if (r.g != 1) throw error(errc::not_invertible, std::to_string(a) + " has no inverse mod " + std::to_string(m));
    return detail::mod_floor(r.x, m);
}

/// p/q in Q with the extra point 1/0. Denominator >= 0, sign on the numerator,
/// always in lowest terms.
class ReducedFraction {
public:
    constexpr ReducedFraction() = default;

    constexpr ReducedFraction(integer num, integer den) {
        if (num == 0 && den == 0) throw error(errc::domain, "0/0 is not a fraction");
        if (den == 0) return;  // 1/0
        const integer g = ext_gcd(num, den).g;
        num_ = num / g;
        den_ = den / g;
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    static constexpr ReducedFraction infinity() { return {}; }

    constexpr integer num() const noexcept { return num_; }
    constexpr integer den() const noexcept { return den_; }
    constexpr bool is_infinite() const noexcept { return den_ == 0; }

    friend constexpr bool operator==(const ReducedFraction&, const ReducedFraction&) = default;

private:
    integer num_ = 1;
    integer den_ = 0;
};

/// Text form that keeps the sign on the denominator for negative values,
/// e.g. -2/9 prints as "2/-9".
inline std::string to_string(const ReducedFraction& f) {
    if (f.num() < 0) return std::to_string(-f.num()) + "/-" + std::to_string(f.den());
    return std::to_string(f.num()) + "/" + std::to_string(f.den());
}

inline std::ostream& operator<<(std::ostream& os, const ReducedFraction& f) { return os << to_string(f); }

/// A nonempty list of nonzero even coefficients.
class EvenCF {
public:
    explicit EvenCF(std::vector<integer> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw error(errc::domain, "continued fraction needs at least one entry");
        for (integer a : coeffs_)
            if (a == 0 || a % 2 != 0)
                throw error(errc::domain, "entry " + std::to_string(a) + " is not a nonzero even integer");
    }

    std::span<const integer> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    integer operator[](std::size_t i) const { return coeffs_.at(i); }

    friend bool operator==(const EvenCF&, const EvenCF&) = default;

private:
    std::vector<integer> coeffs_;
};

inline std::string to_string(const EvenCF& cf) {
    std::string s = "[";
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cf[i]);
    }
    return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const EvenCF& cf) { return os << to_string(cf); }

/// Expands 0 < |f| < 1 as [a1, ..., ak] with every ai even, choosing the even
/// integer nearest the running reciprocal at each step.
inline EvenCF cf_even_expand(const ReducedFraction& f) {
    if (f.is_infinite() || f.num() == 0 || detail::checked_abs(f.num()) >= f.den())
        throw error(errc::domain, "even expansion needs 0 < |f| < 1, got " + to_string(f));

    // running reciprocal r = x/y with y > 0
    integer x = f.den(), y = f.num();
    if (y < 0) {
        x = -x;
        y = -y;
    }
    std::vector<integer> out;
    for (;;) {
        const integer a = detail::narrow(2 * static_cast<wide>(detail::floor_div(static_cast<wide>(x) + y, 2 * static_cast<wide>(y))));
        const integer rem = detail::narrow(static_cast<wide>(x) - static_cast<wide>(a) * y);
        if (detail::checked_abs(rem) >= y)
            throw error(errc::no_even_expansion, "odd integer " + std::to_string(x / y) + " reached while expanding " + to_string(f));
        out.push_back(a);
        if (rem == 0) break;
        // 1/(r - a) = y/rem
        x = y;
        y = rem;
        if (y < 0) {
            x = -x;
            y = -y;
        }
    }
    return EvenCF(std::move(out));
}

/// Exact value of 1/(a1 + 1/(a2 + ... + 1/ak)) for nonzero entries.
inline ReducedFraction cf_evaluate(std::span<const integer> coeffs) {
    if (coeffs.empty()) throw error(errc::domain, "empty continued fraction");
    for (integer a : coeffs)
        if (a == 0) throw error(errc::domain, "continued fraction entries must be nonzero");
    // tail value n/d, starting from ak/1
    integer n = coeffs.back(), d = 1;
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        if (n == 0) throw error(errc::degenerate_cf, "zero intermediate denominator");
        // a + d/n = (a*n + d)/n
        const integer next = detail::narrow(static_cast<wide>(coeffs[i]) * n + d);
        d = n;
        n = next;
    }
    if (n == 0) throw error(errc::degenerate_cf, "zero intermediate denominator");
    return ReducedFraction(d, n);
}

inline ReducedFraction cf_evaluate(const EvenCF& cf) { return cf_evaluate(cf.coeffs()); }

}  // namespace pinchknot
