#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable report documents and the verification harness.
 *
 * Every JSON document has the top-level keys schema_version, command,
 * inputs, results, status (in that order). Fractions are [num, den] with the
 * sign on the numerator; knots are [p, q] in the order they were given.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pinchknot/criteria.hpp"
#include "pinchknot/families.hpp"
#include "pinchknot/pinch.hpp"
#include "pinchknot/tables.hpp"
#include "pinchknot/tangles.hpp"

namespace pinchknot {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1.0";

enum class Status { ok, violation, error };

constexpr const char* to_string(Status s) noexcept {
    switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::error: return "error";
    }
    return "error";
}

inline Status status_from_string(const std::string& s) {
    if (s == "ok") return Status::ok;
    if (s == "violation") return Status::violation;
    if (s == "error") return Status::error;
    throw error(errc::domain, "unknown status '" + s + "'");
}

struct ReportDocument {
    std::string schema_version = pinchknot::schema_version;
    std::string command;
    json inputs = json::object();
    json results = json::object();
    Status status = Status::ok;

    json to_json() const {
        json j;
        j["schema_version"] = schema_version;
        j["command"] = command;
        j["inputs"] = inputs;
        j["results"] = results;
        j["status"] = to_string(status);
        return j;
    }

    std::string dump() const { return to_json().dump(2); }

    static ReportDocument from_json(const json& j) {
        for (const char* key : {"schema_version", "command", "inputs", "results", "status"})
            if (!j.contains(key)) throw error(errc::domain, std::string("report is missing '") + key + "'");
        ReportDocument d;
        d.schema_version = j.at("schema_version").get<std::string>();
        d.command = j.at("command").get<std::string>();
        d.inputs = j.at("inputs");
        d.results = j.at("results");
        d.status = status_from_string(j.at("status").get<std::string>());
        return d;
    }

    friend bool operator==(const ReportDocument& a, const ReportDocument& b) { return a.to_json() == b.to_json(); }
};

// ---------------------------------------------------------------------------
// JSON encoders

inline json to_json(const TorusKnot& k) { return json::array({k.p(), k.q()}); }
inline json to_json(const ReducedFraction& f) { return json::array({f.num(), f.den()}); }
inline json to_json(Sign s) { return std::string(1, sign_char(s)); }

inline json to_json(const EvenCF& cf) {
    json j = json::array();
    for (integer a : cf.coeffs()) j.push_back(a);
    return j;
}

inline json to_json(const MatSL2& m) { return json::array({json::array({m.a(), m.b()}), json::array({m.c(), m.d()})}); }

inline json to_json(const PinchStep& s) {
    json j;
    j["from"] = to_json(s.from);
    j["to"] = to_json(s.to);
    j["t"] = s.t;
    j["h"] = s.h;
    j["sign"] = to_json(s.sign);
    return j;
}

inline json to_json(const PinchSequence& seq) {
    json j;
    j["start"] = to_json(seq.start);
    j["steps"] = json::array();
    for (const PinchStep& s : seq.steps) j["steps"].push_back(to_json(s));
    j["pinch_number"] = seq.pinch_number();
    return j;
}

inline json to_json(const TwoBridgeKnot& k) {
    json j;
    j["t1"] = to_json(k.t1);
    j["t2"] = to_json(k.t2);
    j["normalized"] = to_json(k.normalized);
    return j;
}

inline json to_json(const SignSequence& s) {
    json j;
    j["knot"] = to_json(s.knot);
    j["signs"] = json::array();
    for (Sign x : s.signs) j["signs"].push_back(to_json(x));
    j["negative_count"] = s.negative_count;
    return j;
}

inline json to_json(const CounterexampleReport& r) {
    json j;
    j["family"] = std::string(1, family_char(r.id.family));
    j["n"] = r.id.n;
    j["knot"] = to_json(r.knot);
    j["pinch_number"] = r.pinch_number;
    j["band_count"] = r.band_count;
    j["slice_fraction"] = to_json(r.slice_knot.normalized);
    j["cf"] = to_json(r.slice_cf);
    j["slice"] = r.slice_recognized;
    j["determinant"] = r.determinant;
    j["jvc_negative_count"] = r.jvc.negative_count;
    j["jvc_equals_pinch_minus_one"] = r.jvc.equals_pinch_minus_one;
    return j;
}

// ---------------------------------------------------------------------------
// Verification harness

/// Outcome of one group of checks.
struct CheckResult {
    std::string name;
    std::string summary;
    std::vector<std::string> violations;

    bool passed() const noexcept { return violations.empty(); }

    json to_json() const {
        json j;
        j["name"] = name;
        j["passed"] = passed();
        j["summary"] = summary;
        j["violations"] = violations;
        return j;
    }
};

namespace detail {

template <class Rows>
std::size_t match_rows(const Rows& rows, std::vector<std::string>& violations) {
    std::size_t matched = 0;
    for (const tables::Row& row : rows) {
        const FamilyId id(row.family, row.n);
        const TorusKnot start(row.chain.front().first, row.chain.front().second);
        bool ok = family_knot(id) == start;
        std::string why;
        if (!ok) why = "start " + to_string(start) + " is not " + to_string(family_knot(id));

        const PinchSequence seq = pinch_sequence(start);
        if (seq.steps.size() + 1 != row.chain.size()) {
            ok = false;
            why = "engine gives " + std::to_string(seq.steps.size()) + " arrows, table has " + std::to_string(row.chain.size() - 1);
        } else {
            for (std::size_t i = 0; i < seq.steps.size(); ++i) {
                const TorusKnot expected(row.chain[i + 1].first, row.chain[i + 1].second);
                if (seq.steps[i].to != expected) {
                    ok = false;
                    why = "arrow " + std::to_string(i + 1) + ": engine " + to_string(seq.steps[i].to) + ", table " + to_string(expected);
                    break;
                }
            }
        }
        if (ok) ++matched;
        else violations.push_back(to_string(id) + ": " + why);
    }
    return matched;
}

}  // namespace detail

inline CheckResult check_tables() {
    CheckResult r{"tables", "", {}};
    const std::size_t k = detail::match_rows(tables::k_rows, r.violations);
    const std::size_t j = detail::match_rows(tables::j_rows, r.violations);
    r.summary = "K: " + std::to_string(k) + "/" + std::to_string(tables::k_rows.size()) + " rows match, J: " + std::to_string(j) + "/" +
                std::to_string(tables::j_rows.size()) + " rows match";
    return r;
}

/// pinch_number = 2n and the closed form tracks the engine step by step.
inline CheckResult check_pinch_numbers(integer max_n) {
    CheckResult r{"pinch-numbers", "", {}};
    std::size_t checked = 0;
    for (Family f : {Family::K, Family::J}) {
        for (integer n = (f == Family::K ? 1 : 2); n <= max_n; ++n) {
            const FamilyId id(f, n);
            const PinchSequence seq = pinch_sequence(family_knot(id));
            ++checked;
            if (seq.pinch_number() != static_cast<std::size_t>(2 * n))
                r.violations.push_back(to_string(id) + ": pinch number " + std::to_string(seq.pinch_number()));
            const std::size_t steps = std::min<std::size_t>(seq.steps.size(), static_cast<std::size_t>(2 * n));
            for (std::size_t k = 0; k <= steps; ++k) {
                const TorusKnot engine = k == 0 ? seq.start : seq.steps[k - 1].to;
                const TorusKnot closed = closed_form_step(n, family_eps(f), static_cast<integer>(k));
                if (!engine.same_knot(closed)) {
                    r.violations.push_back(to_string(id) + ": step " + std::to_string(k) + " engine " + to_string(engine) + " closed form " +
                                           to_string(closed));
                    break;
                }
            }
        }
    }
    r.summary = std::to_string(checked) + " family members, pinch number 2n and closed form";
    return r;
}

inline CheckResult check_corollary_J_to_K(integer max_n) {
    CheckResult r{"J-to-K", "", {}};
    for (integer n = 2; n <= max_n; ++n)
        if (!verify_corollary_J_to_K(n)) r.violations.push_back("J_" + std::to_string(n) + " does not reach K_" + std::to_string(n - 2));
    r.summary = "four pinches on J_n give K_{n-2} for 2 <= n <= " + std::to_string(max_n);
    return r;
}

inline CheckResult check_K_independence(integer max_n) {
    CheckResult r{"K-independence", "", {}};
    for (const IndependenceViolation& v : verify_K_independence(max_n))
        r.violations.push_back("K_" + std::to_string(v.m) + " passes through K_" + std::to_string(v.n) + " at step " + std::to_string(v.step + 1));
    r.summary = "no pinch sequence of K_m meets another K_n for m, n <= " + std::to_string(max_n);
    return r;
}

inline CheckResult check_reports(integer max_n) {
    CheckResult r{"reports", "", {}};
    std::size_t built = 0;
    for (Family f : {Family::K, Family::J}) {
        for (integer n = (f == Family::K ? 1 : 2); n <= max_n; ++n) {
            try {
                counterexample_report(FamilyId(f, n));
                ++built;
            } catch (const error& e) {
                r.violations.push_back(e.what());
            }
        }
    }
    r.summary = std::to_string(built) + " counterexample reports consistent";
    return r;
}

enum class VerifyScope { tables, corollaries, all };

inline ReportDocument verify(VerifyScope scope, integer max_n) {
    if (max_n < 2) throw error(errc::domain, "--max-n must be at least 2");
    std::vector<CheckResult> checks;
    if (scope != VerifyScope::corollaries) checks.push_back(check_tables());
    if (scope == VerifyScope::all) checks.push_back(check_pinch_numbers(max_n));
    if (scope != VerifyScope::tables) {
        checks.push_back(check_corollary_J_to_K(max_n));
        checks.push_back(check_K_independence(max_n));
    }
    if (scope == VerifyScope::all) checks.push_back(check_reports(max_n));

    ReportDocument doc;
    doc.command = "verify";
    doc.inputs["scope"] = scope == VerifyScope::tables ? "tables" : scope == VerifyScope::corollaries ? "corollaries" : "all";
    doc.inputs["max_n"] = max_n;
    std::size_t violations = 0;
    doc.results["checks"] = json::array();
    for (const CheckResult& c : checks) {
        violations += c.violations.size();
        doc.results["checks"].push_back(c.to_json());
    }
    doc.results["violation_count"] = violations;
    doc.status = violations == 0 ? Status::ok : Status::violation;
    return doc;
}

inline ReportDocument verify_all(integer max_n) { return verify(VerifyScope::all, max_n); }

}  // namespace pinchknot
