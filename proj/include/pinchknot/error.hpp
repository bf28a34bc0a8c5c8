#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinchknot {

enum class errc {
    undefined_gcd,
    not_invertible,
    overflow,
    domain,
    no_even_expansion,
    degenerate_cf,
    invalid_knot,
    cannot_pinch_unknot,
    iteration_cap_exceeded,
    invalid_family,
    out_of_range,
    invalid_matrix,
    degenerate_tangles,
    criterion_not_applicable,
    theorem_violation,
};

constexpr std::string_view to_string(errc c) noexcept {
    switch (c) {
    case errc::undefined_gcd: return "undefined-gcd";
    case errc::not_invertible: return "not-invertible";
    case errc::overflow: return "overflow";
    case errc::domain: return "domain";
    case errc::no_even_expansion: return "no-even-expansion";
    case errc::degenerate_cf: return "degenerate-cf";
    case errc::invalid_knot: return "invalid-knot";
    case errc::cannot_pinch_unknot: return "cannot-pinch-unknot";
    case errc::iteration_cap_exceeded: return "iteration-cap-exceeded";
    case errc::invalid_family: return "invalid-family";
    case errc::out_of_range: return "out-of-range";
    case errc::invalid_matrix: return "invalid-matrix";
    case errc::degenerate_tangles: return "degenerate-tangles";
    case errc::criterion_not_applicable: return "criterion-not-applicable";
    case errc::theorem_violation: return "theorem-violation";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace pinchknot
