#pragma once

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "action.hpp"
#include "expr.hpp"
#include "funcring.hpp"
#include "rational.hpp"
#include "skewpoly.hpp"

namespace skewrat {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

inline const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names{"nearring", "convexring", "productformula",
                                                     "metro",    "domains",    "orearith"};
    return names;
}

namespace detail {

class Checker {
   public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (ok) return;
        if (result_.failures++ == 0) result_.first_failure = describe();
    }
    CheckResult done() { return std::move(result_); }

   private:
    CheckResult result_;
};

template <SkewField F>
typename F::Element sample(const F& field, std::mt19937_64& rng) {
    if constexpr (F::is_finite)
        return field.random_element(rng);
    else
        return field.random_element(rng, 3);
}

template <SkewField F>
typename F::Element sample_nonzero(const F& field, std::mt19937_64& rng) {
    for (;;)
        if (auto x = sample(field, rng); !is_zero(x)) return x;
}

template <SkewField F>
SkewPolynomial<F> sample_poly(const FieldRef<F>& field, std::mt19937_64& rng, int degree, bool monic = false) {
    std::vector<typename F::Element> c;
    for (int i = 0; i < degree; ++i) c.push_back(sample(*field, rng));
    c.push_back(monic ? field->one() : sample_nonzero(*field, rng));
    return {field, std::move(c)};
}

template <SkewField F>
SkewRationalFunction<F> sample_function(const FieldRef<F>& field, std::mt19937_64& rng, int max_den, int max_num) {
    const int dd = static_cast<int>(rng() % static_cast<unsigned>(max_den + 1));
    const int nd = static_cast<int>(rng() % static_cast<unsigned>(max_num + 1));
    return normalize(sample_poly(field, rng, dd, true), sample_poly(field, rng, nd));
}

// A point in the class of a: the conjugate by a random nonzero scalar.
template <SkewField F>
typename F::Element sample_conjugate(const F& field, const typename F::Element& a, std::mt19937_64& rng) {
    return conjugate(field, a, sample_nonzero(field, rng));
}

template <SkewField F>
std::string show(const F& field, const typename F::Element& a) {
    return field.format(a);
}

/// Representatives of the conjugacy classes of a finite field, in canonical order.
template <FiniteSkewField F>
std::vector<typename F::Element> class_representatives(const F& field) {
    std::vector<typename F::Element> reps;
    std::vector<char> seen(field.order(), 0);
    for (const auto& x : field.elements()) {
        if (seen[field.index_of(x)]) continue;
        reps.push_back(x);
        for (const auto& y : orbit(field, x)) seen[field.index_of(y)] = 1;
    }
    return reps;
}

template <FiniteSkewField F>
OrbitFunction<F> sample_table(const InvariantSetRef<F>& dom, std::mt19937_64& rng) {
    std::vector<typename F::Element> values;
    for (std::size_t i = 0; i < dom->size(); ++i) values.push_back(dom->field()->random_element(rng));
    return {dom, std::move(values)};
}

// Domains small enough to tabulate, at most a handful of them.
template <FiniteSkewField F>
std::vector<InvariantSetRef<F>> tabulated_domains(const FieldRef<F>& field) {
    std::vector<InvariantSetRef<F>> out;
    for (const auto& r : class_representatives(*field)) {
        if (out.size() == 4) break;
        const auto o = orbit(*field, r);
        if (o.size() < 2 || o.size() > 64) continue;
        out.push_back(FiniteInvariantSet<F>::orbit_of(field, r));
    }
    return out;
}

template <FiniteSkewField F>
std::string show_table(const OrbitFunction<F>& f) {
    std::string out = "{";
    const auto& dom = *f.domain();
    for (std::size_t i = 0; i < dom.size(); ++i)
        out += (i ? ", " : "") + dom.field()->format(dom.at(i)) + ": " + dom.field()->format(f.at(i));
    return out + "}";
}

template <FiniteSkewField F>
SuiteReport suite_nearring(const FieldRef<F>& field, std::mt19937_64& rng) {
    SuiteReport report{"nearring", {}};
    Checker unit("unit law"), dist("right distributivity"), assoc("associativity"), zero("zero function absorbs");
    for (const auto& dom : tabulated_domains(field)) {
        const auto one = OrbitFunction<F>::constant(dom, field->one());
        const auto nil = OrbitFunction<F>::constant(dom, field->zero());
        for (int n = 0; n < 200; ++n) {
            const auto f = sample_table(dom, rng), g = sample_table(dom, rng), h = sample_table(dom, rng);
            unit.expect(skew_mul(f, one) == f && skew_mul(one, f) == f, [&] { return show_table(f); });
            dist.expect(skew_mul(f + g, h) == skew_mul(f, h) + skew_mul(g, h), [&] { return show_table(f); });
            assoc.expect(skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h)), [&] { return show_table(f); });
            zero.expect(skew_mul(nil, f) == nil && skew_mul(f, nil) == nil, [&] { return show_table(f); });
        }
    }
    report.checks = {unit.done(), dist.done(), assoc.done(), zero.done()};
    return report;
}

template <FiniteSkewField F>
SuiteReport suite_convexring(const FieldRef<F>& field, std::mt19937_64& rng) {
    SuiteReport report{"convexring", {}};
    Checker members("constants and identity are convex"), leftdist("convex functions distribute on the left"),
        closed("closure under + and skew product"), inverse("skew inverse of a convex unit is convex and two-sided"),
        endo("endomorphism correspondence round-trips");
    constexpr std::size_t kEnumerate = 20000;
    for (const auto& dom : tabulated_domains(field)) {
        std::vector<OrbitFunction<F>> convex;
        auto consider = [&](const OrbitFunction<F>& f) {
            if (is_skew_convex(f)) convex.push_back(f);
        };
        std::size_t total = 1;
        for (std::size_t i = 0; i < dom->size() && total <= kEnumerate; ++i) total *= field->order();
        if (total <= kEnumerate)
            for_each_function<F>(dom, consider);
        else
            for (int n = 0; n < 500; ++n) consider(sample_table(dom, rng));
        for (const auto& c : field->elements())
            convex.push_back(OrbitFunction<F>::constant(dom, c));
        convex.push_back(OrbitFunction<F>::identity(dom));

        for (const auto& c : field->elements())
            members.expect(is_skew_convex(OrbitFunction<F>::constant(dom, c)), [&] { return show(*field, c); });
        members.expect(is_skew_convex(OrbitFunction<F>::identity(dom)), [] { return std::string("identity"); });

        std::uniform_int_distribution<std::size_t> pick(0, convex.size() - 1);
        for (const auto& f : convex) {
            const auto g = sample_table(dom, rng), h = sample_table(dom, rng);
            leftdist.expect(skew_mul(f, g + h) == skew_mul(f, g) + skew_mul(f, h), [&] { return show_table(f); });
            const auto& other = convex[pick(rng)];
            closed.expect(is_skew_convex(f + other) && is_skew_convex(skew_mul(f, other)),
                          [&] { return show_table(f) + " with " + show_table(other); });
            if (is_skew_invertible(f)) {
                const auto inv = skew_inverse(f);
                const auto one = OrbitFunction<F>::constant(dom, field->one());
                inverse.expect(is_skew_convex(inv) && skew_mul(f, inv) == one && skew_mul(inv, f) == one,
                               [&] { return show_table(f); });
            }
            if (dom->is_single_orbit()) {
                const auto base = dom->at(0);
                endo.expect(convex_of_endo(endo_of_convex(f, base), dom, base) == f, [&] { return show_table(f); });
            }
        }
    }
    report.checks = {members.done(), leftdist.done(), closed.done(), inverse.done(), endo.done()};
    return report;
}

template <SkewField F>
SuiteReport suite_productformula(const FieldRef<F>& field, std::mt19937_64& rng) {
    SuiteReport report{"productformula", {}};
    Checker poly("polynomial product formula"), rational("rational product formula");
    const int rounds = F::is_finite ? 400 : 60;
    for (int n = 0; n < rounds; ++n) {
        const auto p = sample_poly(field, rng, static_cast<int>(rng() % 3));
        const auto q = sample_poly(field, rng, static_cast<int>(rng() % 3));
        const auto a = sample(*field, rng);
        const auto qa = evaluate(q, a);
        const auto expected = is_zero(qa) ? field->zero() : evaluate(p, conjugate(*field, a, qa)) * qa;
        poly.expect(evaluate(poly_mul(p, q), a) == expected, [&] {
            return format_polynomial(p) + " times " + format_polynomial(q) + " at " + show(*field, a);
        });
    }
    const int triples = F::is_finite ? 300 : 30;
    for (int n = 0, tries = 0; n < triples && tries < 20 * triples; ++tries) {
        const auto f = sample_function(field, rng, F::is_finite ? 2 : 1, 2);
        const auto g = sample_function(field, rng, F::is_finite ? 2 : 1, 2);
        const auto a = sample(*field, rng);
        if (!is_defined_at(f, a) || !is_defined_at(g, a) || !is_defined_at(rat_mul(f, g), a)) continue;
        ++n;
        rational.expect(product_formula_check(f, g, a), [&] {
            return format_rational_function(f) + " times " + format_rational_function(g) + " at " + show(*field, a);
        });
    }
    report.checks = {poly.done(), rational.done()};
    return report;
}

template <SkewField F>
SuiteReport suite_metro(const FieldRef<F>& field, std::mt19937_64& rng) {
    SuiteReport report{"metro", {}};
    Checker criterion("(T-b)^-1 defined at a iff b is not conjugate to a"),
        orbitwise("defined iff the metro equation is uniquely solvable across the class"),
        equation("metro solution satisfies the equation"), value("value of (T-b)^-1 is the metro solution at a");
    auto check_pair = [&](const typename F::Element& a, const typename F::Element& b,
                          const std::vector<typename F::Element>& class_points) {
        const SkewRationalFunction<F> f(SkewPolynomial<F>::linear(field, b), SkewPolynomial<F>::one(field));
        const bool defined = is_defined_at(f, a);
        const auto where = [&] { return "a=" + show(*field, a) + ", b=" + show(*field, b); };
        criterion.expect(defined == !same_class(*field, a, b), where);
        bool all_unique = true;
        for (const auto& c : class_points) {
            const auto m = metro_solve(field, b, c);
            all_unique = all_unique && m.status == MetroStatus::Unique;
            if (m.value)
                equation.expect(field->sigma(*m.value) * c + field->delta(*m.value) - b * *m.value == field->one(), where);
        }
        orbitwise.expect(defined == all_unique, where);
        if (defined) value.expect(evaluate_at(f, a) == metro_solve(field, b, a).value, where);
    };
    if constexpr (FiniteSkewField<F>) {
        const auto elems = field->elements();
        const bool exhaustive = elems.size() <= 64;
        const std::size_t rounds = exhaustive ? elems.size() * elems.size() : 2000;
        for (std::size_t n = 0; n < rounds; ++n) {
            const auto& a = exhaustive ? elems[n / elems.size()] : elems[rng() % elems.size()];
            const auto& b = exhaustive ? elems[n % elems.size()] : elems[rng() % elems.size()];
            check_pair(a, b, orbit(*field, a));
        }
    } else {
        for (int n = 0; n < 80; ++n) {
            const auto a = sample(*field, rng);
            // Half the cases put b in the class of a.
            const auto b = n % 2 ? sample_conjugate(*field, a, rng) : sample(*field, rng);
            std::vector<typename F::Element> pts{a};
            for (int k = 0; k < 3; ++k) pts.push_back(sample_conjugate(*field, a, rng));
            check_pair(a, b, pts);
        }
    }
    report.checks = {criterion.done(), orbitwise.done(), equation.done(), value.done()};
    return report;
}

template <SkewField F>
SuiteReport suite_domains(const FieldRef<F>& field, std::mt19937_64& rng) {
    SuiteReport report{"domains", {}};
    Checker excluded("excluded classes are undefined"), pointwise("report agrees with pointwise definedness"),
        invariant("definedness is constant on classes"), roots("defined iff no root of the denominator in the class"),
        complete("report is complete");
    const int rounds = F::is_finite ? 200 : 12;
    for (int n = 0; n < rounds; ++n) {
        SkewRationalFunction<F> f = SkewRationalFunction<F>::one(field);
        if constexpr (F::is_finite) {
            f = sample_function(field, rng, 2, 2);
        } else {
            // Products of linear factors guarantee excluded classes exist.
            auto den = SkewPolynomial<F>::one(field);
            const int factors = 1 + static_cast<int>(rng() % 2);
            for (int k = 0; k < factors; ++k) den = poly_mul(den, SkewPolynomial<F>::linear(field, sample(*field, rng)));
            f = normalize(den, sample_poly(field, rng, static_cast<int>(rng() % 2)));
        }
        const auto rep = domain_report(f);
        const auto where = [&] { return format_rational_function(f); };
        complete.expect(rep.complete, where);
        for (const auto& cls : rep.excluded) {
            excluded.expect(!is_defined_at(f, cls.representative), where);
            if constexpr (!F::is_finite)
                excluded.expect(!is_defined_at(f, sample_conjugate(*field, cls.representative, rng)), where);
        }
        auto listed = [&](const typename F::Element& a) {
            const auto c = class_of(*field, a);
            for (const auto& e : rep.excluded)
                if (e == c) return true;
            return false;
        };
        std::vector<typename F::Element> points;
        if constexpr (F::is_finite)
            points = field->elements();
        else
            for (int k = 0; k < 20; ++k) points.push_back(sample(*field, rng));
        for (const auto& a : points) {
            const bool defined = is_defined_at(f, a);
            if (rep.complete) pointwise.expect(defined == !listed(a), where);
            invariant.expect(defined == is_defined_at(f, sample_conjugate(*field, a, rng)), where);
            if constexpr (FiniteSkewField<F>) {
                bool root = false;
                for (const auto& c : orbit(*field, a)) root = root || is_zero(evaluate(f.den(), c));
                roots.expect(defined == !root, where);
            }
        }
    }
    report.checks = {complete.done(), excluded.done(), pointwise.done(), invariant.done()};
    if constexpr (FiniteSkewField<F>) report.checks.push_back(roots.done());
    return report;
}

template <SkewField F>
SuiteReport suite_orearith(const FieldRef<F>& field, std::mt19937_64& rng) {
    SuiteReport report{"orearith", {}};
    Checker ring("field axioms"), inverses("two-sided inverses"), canonical("normal form is monic and reduced"),
        roundtrip("printed form parses back"), division("division identities");
    const int rounds = F::is_finite ? 150 : 25;
    const int maxd = F::is_finite ? 2 : 1;
    using R = SkewRationalFunction<F>;
    for (int n = 0; n < rounds; ++n) {
        const auto f = sample_function(field, rng, maxd, maxd), g = sample_function(field, rng, maxd, maxd),
                   h = sample_function(field, rng, maxd, maxd);
        const auto where = [&] {
            return format_rational_function(f) + ", " + format_rational_function(g) + ", " + format_rational_function(h);
        };
        ring.expect(rat_mul(rat_mul(f, g), h) == rat_mul(f, rat_mul(g, h)), where);
        ring.expect(rat_add(rat_add(f, g), h) == rat_add(f, rat_add(g, h)), where);
        ring.expect(rat_mul(f, rat_add(g, h)) == rat_add(rat_mul(f, g), rat_mul(f, h)), where);
        ring.expect(rat_mul(rat_add(f, g), h) == rat_add(rat_mul(f, h), rat_mul(g, h)), where);
        ring.expect(rat_add(f, g) == rat_add(g, f), where);
        ring.expect(rat_sub(f, f).is_zero(), where);
        if (!f.is_zero()) {
            const auto inv = rat_inv(f);
            inverses.expect(rat_mul(f, inv) == R::one(field) && rat_mul(inv, f) == R::one(field), where);
        }
        const auto& d = f.den();
        canonical.expect(d.is_monic() && (f.num().is_zero() ? d.degree() == 0 : gcld(d, f.num()).degree() == 0), where);
        roundtrip.expect(lower(format_rational_function(f), field) == f, where);
        // den * f is the numerator as a polynomial.
        division.expect(rat_mul(R::polynomial(d), f) == R::polynomial(f.num()), where);
    }
    report.checks = {ring.done(), inverses.done(), canonical.done(), roundtrip.done(), division.done()};
    return report;
}

}  // namespace detail

/// Runs one named suite; Unsupported when the suite needs a finite field.
template <SkewField F>
SuiteReport run_suite(std::string_view name, const FieldRef<F>& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (name == "nearring" || name == "convexring") {
        if constexpr (FiniteSkewField<F>) {
            return name == "nearring" ? detail::suite_nearring(field, rng) : detail::suite_convexring(field, rng);
        } else {
            throw Error(ErrorKind::Unsupported, std::string(name) + " tabulates functions and needs a finite field");
        }
    }
    if (name == "productformula") return detail::suite_productformula(field, rng);
    if (name == "metro") return detail::suite_metro(field, rng);
    if (name == "domains") return detail::suite_domains(field, rng);
    if (name == "orearith") return detail::suite_orearith(field, rng);
    throw Error(ErrorKind::Unsupported, "unknown suite " + std::string(name));
}

}  // namespace skewrat
