#pragma once

/**
 * @file cli.hpp
 * @brief The pinchknot command line.
 *
 *   pinch-move P Q            one pinch move with t, h and sign
 *   pinch-seq P Q             full pinch sequence to the unknot
 *   pinch-number P Q
 *   family {K|J} N            K_N = T(4N,(2N+1)^2), J_N = T(4N,(2N-1)^2)
 *   surgery-knot {K|J} N      2-bridge slice knot left by the 2N-1 bands
 *   tangle cf P Q             all-even continued fraction of P/Q
 *   tangle apply A B C D P Q  [[A,B],[C,D]] acting on P/Q
 *   jvc P Q                   sign-count criterion (P even, Q odd)
 *   report {K|J} N            assembled counterexample report
 *   verify {tables|corollaries|all} [--max-n N]
 *
 * Global flags: --json (one ReportDocument on stdout), --quiet (no stdout).
 * Exit codes: 0 ok, 1 verification violation, 2 usage or domain error.
 */

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pinchknot/report.hpp"

namespace pinchknot::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

struct Outcome {
    ReportDocument doc;
    std::string text;
};

namespace detail {

inline FamilyId parse_family(const std::string& name, integer n) {
    return FamilyId(name == "K" ? Family::K : Family::J, n);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string signs_text(const std::vector<Sign>& signs) {
    std::string s = "[";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) s += ',';
        s += sign_char(signs[i]);
    }
    return s + "]";
}

inline Outcome pinch_move_cmd(integer p, integer q) {
    const PinchStep s = pinch_move(TorusKnot(p, q));
    Outcome o;
    o.doc.command = "pinch-move";
    o.doc.inputs = {{"p", p}, {"q", q}};
    o.doc.results = to_json(s);
    o.doc.results["p_minus_2t"] = s.p_minus_2t;
    o.doc.results["q_minus_2h"] = s.q_minus_2h;
    std::ostringstream os;
    os << s.from << " -> " << s.to << "  t=" << s.t << " h=" << s.h << " sign=" << sign_char(s.sign) << "  (p-2t=" << s.p_minus_2t
       << ", q-2h=" << s.q_minus_2h << ")\n";
    o.text = os.str();
    return o;
}

inline Outcome pinch_seq_cmd(integer p, integer q) {
    const PinchSequence seq = pinch_sequence(TorusKnot(p, q));
    Outcome o;
    o.doc.command = "pinch-seq";
    o.doc.inputs = {{"p", p}, {"q", q}};
    o.doc.results = to_json(seq);

    std::ostringstream os;
    os << "pinch sequence of T" << seq.start << ":\n";
    if (!seq.steps.empty()) {
        std::string chain = to_string(seq.start);
        for (const PinchStep& s : seq.steps) chain += "->" + to_string(s.to);
        os << chain << "\n\n";
        os << std::left << std::setw(16) << "from" << std::setw(16) << "to" << std::right << std::setw(12) << "t" << std::setw(12) << "h"
           << "  sign\n";
        for (const PinchStep& s : seq.steps)
            os << std::left << std::setw(16) << to_string(s.from) << std::setw(16) << to_string(s.to) << std::right << std::setw(12) << s.t
               << std::setw(12) << s.h << "  " << sign_char(s.sign) << "\n";
    } else {
        os << "already unknotted\n";
    }
    os << "pinch number: " << seq.pinch_number() << "\n";
    o.text = os.str();
    return o;
}

inline Outcome pinch_number_cmd(integer p, integer q) {
    const TorusKnot k(p, q);
    const std::size_t n = pinch_number(k);
    Outcome o;
    o.doc.command = "pinch-number";
    o.doc.inputs = {{"p", p}, {"q", q}};
    o.doc.results = {{"knot", to_json(k)}, {"pinch_number", n}};
    o.text = std::to_string(n) + "\n";
    return o;
}

inline Outcome family_cmd(const std::string& fam, integer n) {
    const FamilyId id = parse_family(fam, n);
    const TorusKnot k = family_knot(id);
    Outcome o;
    o.doc.command = "family";
    o.doc.inputs = {{"family", fam}, {"n", n}};
    o.doc.results = {{"family", fam}, {"n", n}, {"knot", to_json(k)}, {"trivial", id.is_trivial()}};
    o.text = to_string(id) + " = T" + to_string(k) + (id.is_trivial() ? "  (unknotted)" : "") + "\n";
    return o;
}

inline Outcome surgery_knot_cmd(const std::string& fam, integer n) {
    const FamilyId id = parse_family(fam, n);
    const TwoBridgeKnot k = surgery_result_knot(id);
    const EvenCF cf = cf_even_expand(k.normalized);
    const integer det = two_bridge_determinant(k);
    Outcome o;
    o.doc.command = "surgery-knot";
    o.doc.inputs = {{"family", fam}, {"n", n}};
    o.doc.results = to_json(k);
    o.doc.results["cf"] = to_json(cf);
    o.doc.results["determinant"] = det;
    o.doc.results["slice"] = is_slice_family(cf);
    std::ostringstream os;
    os << to_string(id) << ": tau(" << k.t1 << ") U tau(" << k.t2 << ")\n"
       << "denominator closure of " << k.normalized << "\n"
       << "continued fraction: " << cf << "\n"
       << "determinant: " << det << "\n"
       << "slice family: " << yes_no(is_slice_family(cf)) << "\n";
    o.text = os.str();
    return o;
}

inline Outcome tangle_cf_cmd(integer p, integer q) {
    const ReducedFraction f(p, q);
    const EvenCF cf = cf_even_expand(f);
    Outcome o;
    o.doc.command = "tangle cf";
    o.doc.inputs = {{"p", p}, {"q", q}};
    o.doc.results = {{"fraction", to_json(f)}, {"cf", to_json(cf)}};
    o.text = to_string(f) + " = " + to_string(cf) + "\n";
    return o;
}

inline Outcome tangle_apply_cmd(integer a, integer b, integer c, integer d, integer p, integer q) {
    const MatSL2 m(a, b, c, d);
    const ReducedFraction f(p, q);
    const ReducedFraction r = mat_apply(m, f);
    Outcome o;
    o.doc.command = "tangle apply";
    o.doc.inputs = {{"matrix", to_json(m)}, {"p", p}, {"q", q}};
    o.doc.results = {{"fraction", to_json(f)}, {"result", to_json(r)}};
    o.text = to_string(r) + "\n";
    return o;
}

inline Outcome jvc_cmd(integer p, integer q) {
    const TorusKnot k(p, q);
    const JvcVerdict v = jvc_criterion(k);
    const SignSequence s = sign_sequence(k);
    Outcome o;
    o.doc.command = "jvc";
    o.doc.inputs = {{"p", p}, {"q", q}};
    o.doc.results = to_json(s);
    o.doc.results["equals_pinch_minus_one"] = v.equals_pinch_minus_one;
    std::ostringstream os;
    os << "signs of T" << k << ": " << signs_text(s.signs) << "\n"
       << "negative moves: " << v.negative_count << "\n"
       << "nu - sigma/2 = pinch number - 1: " << yes_no(v.equals_pinch_minus_one) << "\n";
    o.text = os.str();
    return o;
}

inline Outcome report_cmd(const std::string& fam, integer n) {
    const CounterexampleReport r = counterexample_report(parse_family(fam, n));
    Outcome o;
    o.doc.command = "report";
    o.doc.inputs = {{"family", fam}, {"n", n}};
    o.doc.results = to_json(r);
    std::ostringstream os;
    os << to_string(r.id) << " = T" << r.knot << "\n"
       << "pinch number:     " << r.pinch_number << "\n"
       << "band surgeries:   " << r.band_count << "\n"
       << "slice knot:       " << r.slice_knot.normalized << " = " << r.slice_cf << "\n"
       << "determinant:      " << r.determinant << "\n"
       << "slice family:     " << yes_no(r.slice_recognized) << "\n"
       << "negative moves:   " << r.jvc.negative_count << " (nu - sigma/2 = pinch number - 1: " << yes_no(r.jvc.equals_pinch_minus_one) << ")\n";
    o.text = os.str();
    return o;
}

inline Outcome verify_cmd(const std::string& scope, integer max_n) {
    const VerifyScope s = scope == "tables" ? VerifyScope::tables : scope == "corollaries" ? VerifyScope::corollaries : VerifyScope::all;
    Outcome o;
    o.doc = verify(s, max_n);
    std::ostringstream os;
    for (const auto& c : o.doc.results["checks"]) {
        os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": " << c["summary"].get<std::string>() << "\n";
        for (const auto& v : c["violations"]) os << "  " << v.get<std::string>() << "\n";
    }
    os << "violations: " << o.doc.results["violation_count"].get<std::size_t>() << "\n";
    o.text = os.str();
    return o;
}

}  // namespace detail

/// Runs the command line on args (program name excluded).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pinch moves, counterexample families and 2-bridge slice certificates for torus knots", "pinchknot"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false, quiet = false;
    app.add_flag("--json", as_json, "Emit a JSON report document");
    app.add_flag("--quiet", quiet, "Print nothing on stdout");

    integer p = 0, q = 0, n = 0, a = 0, b = 0, c = 0, d = 0, max_n = 50;
    std::string fam, scope;
    const auto families = CLI::IsMember({"K", "J"});

    auto add_pq = [&](CLI::App* sub) {
        sub->add_option("P", p)->required();
        sub->add_option("Q", q)->required();
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("FAMILY", fam)->required()->check(families);
        sub->add_option("N", n)->required();
    };

    auto* move = app.add_subcommand("pinch-move", "Apply one pinch move to T(P,Q)");
    add_pq(move);
    auto* seq = app.add_subcommand("pinch-seq", "Pinch sequence of T(P,Q)");
    add_pq(seq);
    auto* number = app.add_subcommand("pinch-number", "Pinch number of T(P,Q)");
    add_pq(number);
    auto* family = app.add_subcommand("family", "Family member K_N or J_N");
    add_family(family);
    auto* surgery = app.add_subcommand("surgery-knot", "2-bridge knot left by the band surgeries on K_N or J_N");
    add_family(surgery);
    auto* tangle = app.add_subcommand("tangle", "Rational tangle computations");
    tangle->require_subcommand(1);
    auto* cf = tangle->add_subcommand("cf", "Even continued fraction of P/Q");
    add_pq(cf);
    auto* apply = tangle->add_subcommand("apply", "Apply [[A,B],[C,D]] to the slope P/Q");
    apply->add_option("A", a)->required();
    apply->add_option("B", b)->required();
    apply->add_option("C", c)->required();
    apply->add_option("D", d)->required();
    add_pq(apply);
    auto* jvc = app.add_subcommand("jvc", "Sign-count criterion for T(P,Q), P even and Q odd");
    add_pq(jvc);
    auto* report = app.add_subcommand("report", "Counterexample report for K_N or J_N");
    add_family(report);
    auto* verify_sub = app.add_subcommand("verify", "Reproduce the reference tables and family corollaries");
    verify_sub->add_option("SCOPE", scope)->required()->check(CLI::IsMember({"tables", "corollaries", "all"}));
    verify_sub->add_option("--max-n", max_n, "Largest family index checked")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    Outcome o;
    int code = exit_ok;
    try {
        if (move->parsed()) o = detail::pinch_move_cmd(p, q);
        else if (seq->parsed()) o = detail::pinch_seq_cmd(p, q);
        else if (number->parsed()) o = detail::pinch_number_cmd(p, q);
        else if (family->parsed()) o = detail::family_cmd(fam, n);
        else if (surgery->parsed()) o = detail::surgery_knot_cmd(fam, n);
        else if (cf->parsed()) o = detail::tangle_cf_cmd(p, q);
        else if (apply->parsed()) o = detail::tangle_apply_cmd(a, b, c, d, p, q);
        else if (jvc->parsed()) o = detail::jvc_cmd(p, q);
        else if (report->parsed()) o = detail::report_cmd(fam, n);
        else o = detail::verify_cmd(scope, max_n);
        code = o.doc.status == Status::ok ? exit_ok : exit_violation;
    } catch (const error& e) {
        const bool violated = e.code() == errc::theorem_violation;
        err << (violated ? "violation: " : "error: ") << e.what() << "\n";
        o.doc.command = app.get_subcommands().front()->get_name();
        o.doc.results = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
        o.doc.status = violated ? Status::violation : Status::error;
        o.text.clear();
        code = violated ? exit_violation : exit_usage;
    }

    if (!quiet) {
        if (as_json) out << o.doc.dump() << "\n";
        else out << o.text;
    }
    return code;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, out, err);
}

}  // namespace pinchknot::cli
