#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace skewrat;
using namespace fixtures;

namespace {

template <class F>
SkewRationalFunction<F> inv_linear(const FieldRef<F>& f, const typename F::Element& b) {
    return SkewRationalFunction<F>(SkewPolynomial<F>::linear(f, b), SkewPolynomial<F>::one(f));
}

template <class F>
SkewRationalFunction<F> poly_fn(const SkewPolynomial<F>& p) {
    return SkewRationalFunction<F>::polynomial(p);
}

template <class F, class Rng>
SkewRationalFunction<F> random_function(const FieldRef<F>& f, Rng& rng, int max_den, int max_num) {
    const auto den = random_poly(f, rng, static_cast<int>(rng() % (max_den + 1)));
    const auto num = random_poly(f, rng, static_cast<int>(rng() % (max_num + 1)));
    return normalize(den, num);
}

}  // namespace

TEST(Rational, NormalizeExamples) {
    const auto q = gaussian();
    const auto t = SkewPolynomial<GaussianField>::variable(q);
    const auto ti = poly(q, {"-i", "1"});
    const auto f = normalize(ti * t, ti);
    EXPECT_EQ(f.den(), t);
    EXPECT_EQ(f.num(), SkewPolynomial<GaussianField>::one(q));

    const auto zero = normalize(poly(q, {"1", "1"}), SkewPolynomial<GaussianField>(q));
    EXPECT_EQ(zero.den(), SkewPolynomial<GaussianField>::one(q));
    EXPECT_TRUE(zero.num().is_zero());

    const auto h = quaternions();
    const auto b = poly(h, {"j", "1"});
    const auto g = normalize(poly(h, {"-2", "2"}), b);
    EXPECT_EQ(g.den(), poly(h, {"-1", "1"}));
    EXPECT_EQ(g.num(), (Quaternion{Rational(1, 2), 0, 0, 0} * b));

    try {
        normalize(SkewPolynomial<GaussianField>(q), t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominator);
    }
}

TEST(Rational, ArithmeticExamples) {
    const auto f4f = f4();
    std::mt19937_64 rng(73);
    const auto one = SkewRationalFunction<FqField>::one(f4f);
    for (int n = 0; n < 50; ++n) {
        const auto f = random_function(f4f, rng, 2, 2);
        if (f.is_zero()) continue;
        EXPECT_EQ(rat_mul(f, rat_inv(f)), one);
        EXPECT_EQ(rat_mul(rat_inv(f), f), one);
        EXPECT_EQ(rat_add(f, SkewRationalFunction<FqField>::zero(f4f)), f);
    }
    const auto q = gaussian();
    const auto ti = poly(q, {"-i", "1"});
    EXPECT_EQ(rat_mul(inv_linear(q, q->i()), poly_fn(ti)), SkewRationalFunction<GaussianField>::one(q));
    try {
        rat_inv(SkewRationalFunction<GaussianField>::zero(q));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroInverse);
    }
}

template <class F>
void check_rational_field_axioms(const FieldRef<F>& f, std::mt19937_64& rng, int rounds) {
    const auto one = SkewRationalFunction<F>::one(f);
    for (int n = 0; n < rounds; ++n) {
        const auto a = random_function(f, rng, 1, 1);
        const auto b = random_function(f, rng, 1, 1);
        const auto c = random_function(f, rng, 1, 1);
        ASSERT_EQ(rat_add(a, b), rat_add(b, a));
        ASSERT_EQ(rat_add(rat_add(a, b), c), rat_add(a, rat_add(b, c)));
        ASSERT_EQ(rat_mul(rat_mul(a, b), c), rat_mul(a, rat_mul(b, c)));
        ASSERT_EQ(rat_mul(a, rat_add(b, c)), rat_add(rat_mul(a, b), rat_mul(a, c)));
        ASSERT_EQ(rat_mul(rat_add(a, b), c), rat_add(rat_mul(a, c), rat_mul(b, c)));
        ASSERT_TRUE(rat_sub(a, a).is_zero());
        if (!a.is_zero()) ASSERT_EQ(rat_mul(a, rat_inv(a)), one);
        // Normal form invariants.
        const auto s = rat_mul(a, b);
        ASSERT_TRUE(s.den().is_monic());
        if (!s.is_zero()) {
            ASSERT_EQ(gcld(s.den(), s.num()), SkewPolynomial<F>::one(f));
        }
    }
}

TEST(Rational, FieldAxiomsRandom) {
    std::mt19937_64 rng(79);
    check_rational_field_axioms(f4(), rng, 200);
    check_rational_field_axioms(f4_delta(), rng, 200);
    check_rational_field_axioms(f9_delta(), rng, 100);
    check_rational_field_axioms(gaussian(), rng, 25);
    check_rational_field_axioms(quaternions(), rng, 25);
    check_rational_field_axioms(quaternions(Quaternion{0, 1, 0, 0}), rng, 15);
}

TEST(Rational, EvalOperatorExamples) {
    const auto h = quaternions();
    const auto a = el(h, "1+2j-k");
    EXPECT_EQ(eval_operator(SkewPolynomial<QuaternionField>::one(h), a).op, LinearOperator<QuaternionField>::identity(h));
    const auto b = el(h, "i-3k");
    const auto op = eval_operator(SkewPolynomial<QuaternionField>::linear(h, b), a).op;
    std::mt19937_64 rng(83);
    for (int n = 0; n < 10; ++n) {
        const auto x = random_element(*h, rng);
        EXPECT_EQ(op.apply(x), x * a - b * x);
    }
}

template <class F>
void check_operator_identities(const FieldRef<F>& f, std::mt19937_64& rng) {
    for (int n = 0; n < 20; ++n) {
        const auto p = random_poly(f, rng, static_cast<int>(rng() % 4));
        const auto a = random_element(*f, rng);
        const auto op = eval_operator(p, a).op;
        ASSERT_EQ(op.apply(f->one()), evaluate(p, a));
        for (int k = 0; k < 4; ++k) {
            const auto x = random_nonzero(*f, rng);
            ASSERT_EQ(op.apply(x), evaluate(p, conjugate(*f, a, x)) * x);
        }
    }
}

TEST(Rational, LambdaTransformIdentity) {
    std::mt19937_64 rng(89);
    check_operator_identities(f4_delta(), rng);
    check_operator_identities(f9_delta(), rng);
    check_operator_identities(gaussian(), rng);
    check_operator_identities(gaussian(GaussianSigma::Conjugation, Gaussian{1, 1}), rng);
    check_operator_identities(gaussian(GaussianSigma::Identity), rng);
    check_operator_identities(quaternions(), rng);
    check_operator_identities(quaternions(Quaternion{0, 0, 2, 1}), rng);
}

TEST(Rational, DefinednessExamples) {
    const auto h = quaternions();
    EXPECT_FALSE(is_defined_at(inv_linear(h, h->i()), h->j()));
    EXPECT_TRUE(is_defined_at(inv_linear(h, h->i()), el(h, "2j")));
    const auto q = gaussian();
    EXPECT_FALSE(is_defined_at(inv_linear(q, q->one()), q->i()));
    const auto f = f4();
    const auto tinv = inv_linear(f, f->zero());
    EXPECT_TRUE(is_defined_at(tinv, f->generator()));
    EXPECT_FALSE(is_defined_at(tinv, f->zero()));
}

TEST(Rational, EvaluateAtExamples) {
    const auto q = gaussian();
    EXPECT_EQ(evaluate_at(inv_linear(q, q->one()), el(q, "2")), q->one());
    const auto h = quaternions();
    EXPECT_EQ(h->format(evaluate_at(inv_linear(h, h->i()), el(h, "2j"))), "-1/3i-2/3j");
    const SkewRationalFunction<GaussianField> f(poly(q, {"1", "0", "1"}), SkewPolynomial<GaussianField>::one(q));
    EXPECT_EQ(evaluate_at(f, el(q, "1+i")), (Gaussian{Rational(1, 3), 0}));
    try {
        evaluate_at(inv_linear(h, h->i()), h->j());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UndefinedAtPoint);
    }
}

TEST(Rational, MetroExamples) {
    const auto f = f9();
    for (const auto& c : f->elements()) {
        if (is_zero(c)) continue;
        const auto r = metro_solve(f, f->zero(), c);
        ASSERT_EQ(r.status, MetroStatus::Unique);
        EXPECT_EQ(*r.value, f->sigma_inverse(inverse(c)));
    }
    const auto q = gaussian();
    const auto r = metro_solve(q, q->one(), el(q, "2"));
    ASSERT_EQ(r.status, MetroStatus::Unique);
    EXPECT_EQ(*r.value, q->one());
    const auto h = quaternions();
    const auto none = metro_solve(h, h->i(), h->i());
    EXPECT_EQ(none.status, MetroStatus::NoSolution);
    EXPECT_FALSE(none.value);
    // The operator x -> (^x c - b) x is singular exactly when b ~ c.
    for (const auto& fd : {f4(), f4_delta(), f9_delta()})
        for (const auto& b : fd->elements())
            for (const auto& c : fd->elements()) {
                const auto res = metro_solve(fd, b, c);
                ASSERT_EQ(res.status == MetroStatus::Unique, !same_class(*fd, b, c));
                ASSERT_EQ(res.value.has_value(), res.status == MetroStatus::Unique);
            }
}

TEST(Rational, SemiInvariantEvaluationExamples) {
    const auto q = gaussian();
    const SkewRationalFunction<GaussianField> f(poly(q, {"1", "0", "1"}), SkewPolynomial<GaussianField>::one(q));
    EXPECT_EQ(eval_semi_invariant(f, el(q, "1+i")), (Gaussian{Rational(1, 3), 0}));
    const auto h = quaternions();
    const SkewRationalFunction<QuaternionField> central(poly(h, {"1", "0", "1"}), poly(h, {"i", "k"}));
    EXPECT_EQ(eval_semi_invariant(central, el(h, "2j")), evaluate_at(central, el(h, "2j")));
    EXPECT_THROW(eval_semi_invariant(inv_linear(h, h->i()), el(h, "2j")), Error);
    const SkewRationalFunction<GaussianField> z(poly(q, {"1", "0", "1"}), poly(q, {"-2", "1"}));
    EXPECT_TRUE(is_zero(eval_semi_invariant(z, el(q, "2"))));
    try {
        eval_semi_invariant(inv_linear(q, q->i()), q->one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSemiInvariant);
    }
    try {
        eval_semi_invariant(SkewRationalFunction<QuaternionField>(poly(h, {"1", "0", "1"}), poly(h, {"1"})), h->i());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UndefinedAtPoint);
    }
}

TEST(Rational, LinearKernelExamples) {
    const auto q = gaussian();
    EXPECT_EQ(*linear_kernel(*q, q->one(), el(q, "2")), q->one());
    const auto h = quaternions();
    EXPECT_EQ(*linear_kernel(*h, h->i(), el(h, "2j")), (Quaternion{0, Rational(-1, 3), Rational(-2, 3), 0}));
    EXPECT_FALSE(linear_kernel(*h, h->i(), h->j()));
    try {
        linear_kernel(*gaussian(GaussianSigma::Identity), q->one(), q->one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedField);
    }
    EXPECT_THROW(linear_kernel(*f4(), f4()->one(), f4()->one()), Error);
}

TEST(Rational, QuadraticKernelExamples) {
    const auto q = gaussian();
    EXPECT_EQ(quadratic_kernel_gaussian(*q, q->zero(), q->one(), el(q, "1+i")), (Gaussian{Rational(1, 3), 0}));
    EXPECT_EQ(quadratic_kernel_gaussian(*q, q->zero(), q->one(), q->zero()), q->one());
    const auto v = quadratic_kernel_gaussian(*q, q->i(), q->one(), q->one());
    EXPECT_EQ(v, (Gaussian{Rational(2, 3), Rational(-1, 3)}));
    const SkewRationalFunction<GaussianField> f(poly(q, {"1", "i", "1"}), SkewPolynomial<GaussianField>::one(q));
    EXPECT_EQ(evaluate_at(f, q->one()), v);
    // T^2 - 1 has the right root 1.
    try {
        quadratic_kernel_gaussian(*q, q->zero(), el(q, "-1"), el(q, "2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ReducibleDenominator);
    }
    // |z|^2 - 2z + 1 vanishes at z = 1.
    EXPECT_THROW(quadratic_kernel_gaussian(*q, el(q, "-2"), q->one(), q->i()), Error);
}

TEST(Rational, QuadraticRootTestAgreesWithSearch) {
    // Brute force over small z in Q(i) for random small (b, c) that do have a root by construction.
    std::mt19937_64 rng(97);
    const auto q = gaussian();
    for (int n = 0; n < 200; ++n) {
        const auto z = random_element(*q, rng);
        const auto b = random_element(*q, rng);
        const auto c = -(Gaussian{z.norm(), 0} + b * z);
        EXPECT_TRUE(detail::gaussian_quadratic_has_root(b, c));
    }
    EXPECT_FALSE(detail::gaussian_quadratic_has_root(q->zero(), q->one()));
    EXPECT_FALSE(detail::gaussian_quadratic_has_root(q->i(), q->one()));
    EXPECT_FALSE(detail::gaussian_quadratic_has_root(q->one(), q->one()));
    EXPECT_FALSE(detail::gaussian_quadratic_has_root(q->zero(), el(q, "-3")));
}

TEST(Rational, DomainReportExamples) {
    const auto h = quaternions();
    const auto rh = domain_report(inv_linear(h, h->i()));
    ASSERT_EQ(rh.excluded.size(), 1u);
    EXPECT_TRUE(rh.complete);
    EXPECT_EQ(rh.excluded[0].invariant, class_of(*h, h->i()).invariant);
    EXPECT_TRUE(same_class(*h, rh.excluded[0].representative, h->j()));

    const auto q = gaussian();
    const auto rq = domain_report(inv_linear(q, q->one()));
    ASSERT_EQ(rq.excluded.size(), 1u);
    EXPECT_TRUE(rq.complete);
    EXPECT_EQ(rq.excluded[0].invariant, "norm=1");

    const auto rc = domain_report(poly_fn(poly(q, {"3"})));
    EXPECT_TRUE(rc.excluded.empty());
    EXPECT_TRUE(rc.complete);

    const auto f = f4();
    const auto rf = domain_report(inv_linear(f, f->zero()));
    ASSERT_EQ(rf.excluded.size(), 1u);
    EXPECT_TRUE(rf.complete);
    EXPECT_TRUE(is_zero(rf.excluded[0].representative));
}

template <class F>
void check_domain_report_against_sampling(const FieldRef<F>& f, std::mt19937_64& rng, int rounds) {
    for (int n = 0; n < rounds; ++n) {
        // Build a denominator with known roots so excluded classes exist.
        const auto r1 = random_element(*f, rng);
        const auto r2 = random_element(*f, rng);
        const auto den = random_monic(f, rng, static_cast<int>(rng() % 2)) * SkewPolynomial<F>::linear(f, r1) *
                         SkewPolynomial<F>::linear(f, r2);
        const auto fn = normalize(den, SkewPolynomial<F>::one(f));
        const auto report = domain_report(fn);
        ASSERT_TRUE(report.complete);
        for (const auto& cls : report.excluded) ASSERT_FALSE(is_defined_at(fn, cls.representative));
        ASSERT_FALSE(is_defined_at(fn, r2));
        auto excluded = [&](const typename F::Element& x) {
            for (const auto& cls : report.excluded)
                if (same_class(*f, cls.representative, x)) return true;
            return false;
        };
        ASSERT_TRUE(excluded(r2));
        for (int k = 0; k < 10; ++k) {
            const auto x = random_element(*f, rng);
            ASSERT_EQ(is_defined_at(fn, x), !excluded(x));
            const auto y = conjugate(*f, r2, random_nonzero(*f, rng));
            ASSERT_FALSE(is_defined_at(fn, y));
        }
    }
}

TEST(Rational, DomainReportMatchesPointQueries) {
    std::mt19937_64 rng(101);
    check_domain_report_against_sampling(f4_delta(), rng, 20);
    check_domain_report_against_sampling(f9(), rng, 20);
    check_domain_report_against_sampling(gaussian(), rng, 15);
    check_domain_report_against_sampling(gaussian(GaussianSigma::Identity), rng, 15);
    check_domain_report_against_sampling(gaussian(GaussianSigma::Conjugation, Gaussian{1, -2}), rng, 10);
    check_domain_report_against_sampling(quaternions(), rng, 15);
    check_domain_report_against_sampling(quaternions(Quaternion{0, 1, 1, 0}), rng, 10);
}

TEST(Rational, DefinednessIsClassInvariant) {
    std::mt19937_64 rng(103);
    for (const auto& f : {f4(), f4_delta(), f9(), f9_delta()}) {
        for (int n = 0; n < 40; ++n) {
            const auto fn = normalize(random_poly(f, rng, 2), random_poly(f, rng, 1));
            for (const auto& a : f->elements()) {
                const bool defined = is_defined_at(fn, a);
                for (const auto& c : orbit(*f, a)) ASSERT_EQ(is_defined_at(fn, c), defined);
            }
        }
    }
    const auto h = quaternions();
    const auto q = gaussian();
    for (int n = 0; n < 20; ++n) {
        const auto fh = normalize(random_poly(h, rng, 2), random_poly(h, rng, 1));
        const auto a = random_element(*h, rng);
        ASSERT_EQ(is_defined_at(fh, a), is_defined_at(fh, conjugate(*h, a, random_nonzero(*h, rng))));
        const auto fq = normalize(random_poly(q, rng, 2), random_poly(q, rng, 1));
        const auto x = random_element(*q, rng);
        ASSERT_EQ(is_defined_at(fq, x), is_defined_at(fq, conjugate(*q, x, random_nonzero(*q, rng))));
    }
}

template <class F>
void check_metro_value(const FieldRef<F>& f, std::mt19937_64& rng) {
    for (int n = 0; n < 30; ++n) {
        const auto a = random_element(*f, rng), b = random_element(*f, rng);
        const auto fn = inv_linear(f, b);
        if (!is_defined_at(fn, a)) {
            ASSERT_TRUE(same_class(*f, a, b));
            continue;
        }
        const auto x = evaluate_at(fn, a);
        ASSERT_EQ(f->sigma(x) * a + f->delta(x) - b * x, f->one());
    }
}

TEST(Rational, MetroValueSatisfiesEquation) {
    std::mt19937_64 rng(107);
    check_metro_value(f4_delta(), rng);
    check_metro_value(f9_delta(), rng);
    check_metro_value(gaussian(), rng);
    check_metro_value(gaussian(GaussianSigma::Conjugation, Gaussian{0, 2}), rng);
    check_metro_value(quaternions(), rng);
    check_metro_value(quaternions(Quaternion{0, 1, 0, 0}), rng);
}

TEST(Rational, ProductFormulaExamples) {
    const auto q = gaussian();
    const auto one = SkewRationalFunction<GaussianField>::one(q);
    const auto f = inv_linear(q, q->one());
    EXPECT_TRUE(product_formula_check(f, one, el(q, "2")));
    EXPECT_TRUE(product_formula_check(f, f, el(q, "2")));
    try {
        product_formula_check(f, f, q->i());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UndefinedAtPoint);
    }
}

TEST(Rational, ConjugateTransferExamples) {
    const auto h = quaternions();
    const auto a = el(h, "2j");
    EXPECT_TRUE(conjugate_transfer_check(h, a, h->i(), a, h->i()));
    EXPECT_TRUE(conjugate_transfer_check(h, a, h->i(), el(h, "2k"), h->j()));
    try {
        conjugate_transfer_check(h, a, h->i(), h->i(), h->j());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotConjugate);
    }
}

namespace {

/// Whether p f is a polynomial, decided without normalize: with U den = V p, p^-1 R = f iff U num = V R.
template <class F>
bool clears_denominator(const SkewPolynomial<F>& p, const SkewRationalFunction<F>& f) {
    const auto m = llcm_with_cofactors(f.den(), p);
    return left_divide(poly_mul(m.left_p, f.num()), m.left_q).remainder.is_zero();
}

}  // namespace

TEST(Rational, MinimalityOracleSmall) {
    std::mt19937_64 rng(109);
    for (const auto& f : {f4(), f4_delta()}) {
        std::vector<SkewPolynomial<FqField>> lower;
        for (int d = 0; d <= 1; ++d)
            for (auto& m : all_monic(f, d)) lower.push_back(m);
        for (int n = 0; n < 100; ++n) {
            const auto fn = normalize(random_poly(f, rng, 2), random_poly(f, rng, 2));
            ASSERT_TRUE(clears_denominator(fn.den(), fn));
            for (const auto& p : lower)
                if (p.degree() < fn.den().degree()) ASSERT_FALSE(clears_denominator(p, fn));
        }
    }
}
