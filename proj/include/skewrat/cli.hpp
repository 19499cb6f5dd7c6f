#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "action.hpp"
#include "config.hpp"
#include "expr.hpp"
#include "funcring.hpp"
#include "rational.hpp"
#include "verify.hpp"

namespace skewrat::cli {

struct RunResult {
    int exit = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUndefined = 2;
inline constexpr std::string_view kUndefinedMessage = "undefined: point conjugate to a denominator root class";

struct Options {
    std::string command;
    std::string config;
    std::string expr;
    std::string at;
    std::string p, q;
    std::string orbit;
    std::string table;
    std::string suite;
    std::uint64_t seed = 1;
    bool count = false;
    bool list = false;
    bool json = false;
};

namespace detail {

using nlohmann::json;

template <SkewField F>
json class_json(const F& field, const ConjugacyClass<F>& cls) {
    json j{{"representative", field.format(cls.representative)}, {"invariant", cls.invariant}};
    if (cls.finite_orbit) {
        json members = json::array();
        for (const auto& x : *cls.finite_orbit) members.push_back(field.format(x));
        j["orbit"] = members;
    }
    return j;
}

template <FiniteSkewField F>
json table_json(const OrbitFunction<F>& f) {
    json j = json::object();
    const auto& dom = *f.domain();
    for (std::size_t i = 0; i < dom.size(); ++i) j[dom.field()->format(dom.at(i))] = dom.field()->format(f.at(i));
    return j;
}

template <SkewField F>
SkewPolynomial<F> polynomial_arg(const std::string& text, const FieldRef<F>& field, const char* flag) {
    const auto f = lower(text, field);
    if (!f.is_polynomial()) throw Error(ErrorKind::Unsupported, std::string(flag) + " must be a polynomial");
    return f.num();
}

template <SkewField F>
int cmd_eval(const Options& o, const FieldRef<F>& field, std::ostream& out) {
    const auto f = lower(o.expr, field);
    const auto a = field->parse(o.at);
    const bool defined = is_defined_at(f, a);
    if (o.json) {
        const auto report = domain_report(f);
        json excluded = json::array();
        for (const auto& c : report.excluded) excluded.push_back(class_json(*field, c));
        out << json{{"defined", defined},
                    {"value", defined ? json(field->format(evaluate_at(f, a))) : json(nullptr)},
                    {"excluded_classes", excluded},
                    {"complete", report.complete}}
                   .dump()
            << "\n";
    } else if (defined) {
        out << field->format(evaluate_at(f, a)) << "\n";
    } else {
        out << kUndefinedMessage << "\n";
    }
    return defined ? kExitOk : kExitUndefined;
}

template <SkewField F>
int cmd_domain(const Options& o, const FieldRef<F>& field, std::ostream& out) {
    const auto f = lower(o.expr, field);
    const auto report = domain_report(f);
    std::optional<bool> defined;
    std::optional<typename F::Element> value;
    if (!o.at.empty()) {
        const auto a = field->parse(o.at);
        defined = is_defined_at(f, a);
        if (*defined) value = evaluate_at(f, a);
    }
    if (o.json) {
        json excluded = json::array();
        for (const auto& c : report.excluded) excluded.push_back(class_json(*field, c));
        out << json{{"defined", defined ? json(*defined) : json(nullptr)},
                    {"value", value ? json(field->format(*value)) : json(nullptr)},
                    {"excluded_classes", excluded},
                    {"complete", report.complete}}
                   .dump()
            << "\n";
    } else {
        if (report.excluded.empty()) out << "excluded: none\n";
        for (const auto& c : report.excluded)
            out << "excluded: class of " << field->format(c.representative) << " [" << c.invariant << "]\n";
        out << "complete: " << (report.complete ? "true" : "false") << "\n";
        if (defined) {
            if (*defined)
                out << "value: " << field->format(*value) << "\n";
            else
                out << kUndefinedMessage << "\n";
        }
    }
    return defined && !*defined ? kExitUndefined : kExitOk;
}

template <SkewField F>
int cmd_gcd_lcm(const Options& o, const FieldRef<F>& field, std::ostream& out) {
    const auto p = polynomial_arg(o.p, field, "--p");
    const auto q = polynomial_arg(o.q, field, "--q");
    const auto r = o.command == "gcd" ? gcrd(p, q) : llcm(p, q);
    if (o.json)
        out << json{{"result", format_polynomial(r)}}.dump() << "\n";
    else
        out << format_polynomial(r) << "\n";
    return kExitOk;
}

template <SkewField F>
int cmd_orbit(const Options& o, const FieldRef<F>& field, std::ostream& out) {
    json j = json::array();
    for (const auto& x : orbit(*field, field->parse(o.at))) j.push_back(field->format(x));
    out << j.dump() << "\n";
    return kExitOk;
}

template <SkewField F>
int cmd_convex(const Options& o, const FieldRef<F>& field, std::ostream& out) {
    if constexpr (!FiniteSkewField<F>) {
        throw Error(ErrorKind::Unsupported, "convex functions are tabulated over finite fields only");
    } else {
        if (o.count == o.list) throw CLI::ValidationError("convex", "exactly one of --count and --list is required");
        const auto dom = FiniteInvariantSet<F>::orbit_of(field, field->parse(o.orbit));
        std::size_t count = 0;
        json tables = json::array();
        for_each_function<F>(dom, [&](const OrbitFunction<F>& f) {
            if (!is_skew_convex(f)) return;
            ++count;
            if (o.list) tables.push_back(table_json(f));
        });
        if (o.list)
            out << tables.dump() << "\n";
        else if (o.json)
            out << json{{"count", count}}.dump() << "\n";
        else
            out << count << "\n";
        return kExitOk;
    }
}

template <SkewField F>
int cmd_invert(const Options& o, const FieldRef<F>& field, std::ostream& out) {
    if constexpr (!FiniteSkewField<F>) {
        throw Error(ErrorKind::Unsupported, "function tables need a finite field");
    } else {
        const auto dom = FiniteInvariantSet<F>::orbit_of(field, field->parse(o.orbit));
        std::ifstream in(o.table);
        if (!in) throw Error(ErrorKind::DomainMismatch, "cannot read " + o.table);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw Error(ErrorKind::DomainMismatch, std::string("table is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw Error(ErrorKind::DomainMismatch, "table must be a JSON object");
        std::vector<std::optional<typename F::Element>> values(dom->size());
        for (const auto& [key, v] : j.items()) {
            if (!v.is_string()) throw Error(ErrorKind::DomainMismatch, "table values must be element strings");
            const auto pos = dom->position(field->parse(key));
            if (pos == FiniteInvariantSet<F>::npos) throw Error(ErrorKind::DomainMismatch, key + " is not in the orbit");
            if (values[pos]) throw Error(ErrorKind::DomainMismatch, key + " listed twice");
            values[pos] = field->parse(v.template get<std::string>());
        }
        std::vector<typename F::Element> filled;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!values[i]) throw Error(ErrorKind::DomainMismatch, "no value for " + field->format(dom->at(i)));
            filled.push_back(*values[i]);
        }
        const OrbitFunction<F> f(dom, std::move(filled));
        out << table_json(skew_inverse(f)).dump() << "\n";
        return kExitOk;
    }
}

template <SkewField F>
int cmd_verify(const Options& o, const FieldRef<F>& field, std::ostream& out) {
    std::vector<std::string_view> suites;
    if (o.suite == "all") {
        for (const auto s : suite_names()) {
            if (!FiniteSkewField<F> && (s == "nearring" || s == "convexring")) {
                if (!o.json) out << "skip " << s << ": needs a finite field\n";
                continue;
            }
            suites.push_back(s);
        }
    } else {
        suites.push_back(o.suite);
    }
    bool ok = true;
    json reports = json::array();
    for (const auto s : suites) {
        const auto report = run_suite(s, field, o.seed);
        ok = ok && report.ok();
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"name", c.name},
                              {"cases", c.cases},
                              {"failures", c.failures},
                              {"first_failure", c.ok() ? json(nullptr) : json(c.first_failure)}});
            if (o.json) continue;
            out << (c.ok() ? "PASS " : "FAIL ") << report.suite << ": " << c.name << " (" << c.cases << " cases";
            if (!c.ok()) out << ", " << c.failures << " failed, first: " << c.first_failure;
            out << ")\n";
        }
        reports.push_back({{"suite", report.suite}, {"ok", report.ok()}, {"checks", checks}});
    }
    if (o.json) out << json{{"ok", ok}, {"seed", o.seed}, {"suites", reports}}.dump() << "\n";
    return ok ? kExitOk : kExitError;
}

template <SkewField F>
int dispatch(const Options& o, const FieldRef<F>& field, std::ostream& out) {
    if (o.command == "eval") return cmd_eval(o, field, out);
    if (o.command == "domain") return cmd_domain(o, field, out);
    if (o.command == "gcd" || o.command == "lcm") return cmd_gcd_lcm(o, field, out);
    if (o.command == "orbit") return cmd_orbit(o, field, out);
    if (o.command == "convex") return cmd_convex(o, field, out);
    if (o.command == "invert") return cmd_invert(o, field, out);
    return cmd_verify(o, field, out);
}

}  // namespace detail

/// Runs one command line; args excludes the program name.
inline RunResult run(std::vector<std::string> args) {
    Options o;
    CLI::App app{"Skew polynomials, skew rational functions and their evaluation over Ore extensions", "skewrat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "emit JSON");

    auto with_config = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "field configuration file")->required();
        return sub;
    };
    auto* eval = with_config(app.add_subcommand("eval", "evaluate a rational expression at a point"));
    eval->add_option("--expr", o.expr, "expression in T")->required();
    eval->add_option("--at", o.at, "element literal")->required();

    auto* domain = with_config(app.add_subcommand("domain", "report the classes where an expression is undefined"));
    domain->add_option("--expr", o.expr, "expression in T")->required();
    domain->add_option("--at", o.at, "optional point to evaluate at");

    for (const char* name : {"gcd", "lcm"}) {
        auto* sub = with_config(app.add_subcommand(name, std::string(name) == "gcd" ? "greatest common right divisor"
                                                                                   : "least left common multiple"));
        sub->add_option("--p", o.p, "polynomial expression")->required();
        sub->add_option("--q", o.q, "polynomial expression")->required();
    }

    auto* orbit_cmd = with_config(app.add_subcommand("orbit", "list the conjugacy class of a point"));
    orbit_cmd->add_option("--at", o.at, "element literal")->required();

    auto* convex = with_config(app.add_subcommand("convex", "enumerate skew-convex functions on an orbit"));
    convex->add_option("--orbit", o.orbit, "a point of the orbit")->required();
    convex->add_flag("--count", o.count, "print the number of convex functions");
    convex->add_flag("--list", o.list, "print every convex function as a JSON table");

    auto* invert = with_config(app.add_subcommand("invert", "skew inverse of a function table"));
    invert->add_option("--orbit", o.orbit, "a point of the orbit")->required();
    invert->add_option("--table", o.table, "JSON object mapping points to values")->required();

    auto* verify = with_config(app.add_subcommand("verify", "run a randomized verification suite"));
    std::vector<std::string> choices(suite_names().begin(), suite_names().end());
    choices.push_back("all");
    verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(choices));
    verify->add_option("--seed", o.seed, "random seed");

    std::ostringstream out, err;
    RunResult result;
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
        o.command = app.get_subcommands().front()->get_name();
        const auto cfg = load_config(o.config);
        o.json = o.json || cfg.json;
        result.exit = std::visit([&](const auto& field) { return detail::dispatch(o, field, out); }, cfg.field);
    } catch (const CLI::Success& e) {
        result.exit = app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        result.exit = kExitError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        result.exit = kExitError;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace skewrat::cli
