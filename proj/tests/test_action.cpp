#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace skewrat;
using namespace fixtures;

TEST(Action, ConjugateExamples) {
    const auto q = gaussian();
    const auto a = el(q, "5-2i");
    EXPECT_EQ(conjugate(*q, a, q->one()), a);
    EXPECT_EQ(conjugate(*q, el(q, "2"), el(q, "1+i")), el(q, "-2i"));
    const auto h = quaternions();
    EXPECT_EQ(conjugate(*h, h->i(), h->j()), -h->i());
    try {
        conjugate(*h, h->i(), h->zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroConjugator);
    }
}

TEST(Action, SameClassExamples) {
    const auto h = quaternions();
    EXPECT_TRUE(same_class(*h, h->i(), h->i()));
    EXPECT_TRUE(same_class(*h, h->i(), h->j()));
    EXPECT_FALSE(same_class(*h, h->i(), el(h, "2j")));
    EXPECT_FALSE(same_class(*h, el(h, "1"), el(h, "-1")));
    const auto q = gaussian();
    EXPECT_TRUE(same_class(*q, q->one(), q->i()));
    EXPECT_FALSE(same_class(*q, q->zero(), q->i()));
    EXPECT_FALSE(same_class(*q, q->one(), el(q, "1+i")));
    const auto qi = gaussian(GaussianSigma::Identity);
    EXPECT_FALSE(same_class(*qi, qi->one(), qi->i()));
}

TEST(Action, OrbitExamples) {
    const auto f = f4();
    const auto g = f->generator();
    const auto o = orbit(*f, f->one());
    ASSERT_EQ(o.size(), 3u);
    // Lexicographic on (c0, c1): g = (0,1) sorts before 1 = (1,0).
    EXPECT_EQ(o, (std::vector<FqElement>{g, f->one(), g + f->one()}));
    EXPECT_EQ(orbit(*f, f->zero()), std::vector<FqElement>{f->zero()});

    const auto f9f = f9();
    const auto o9 = orbit(*f9f, f9f->one());
    ASSERT_EQ(o9.size(), 4u);
    for (const auto& b : f9f->elements()) {
        if (is_zero(b)) continue;
        EXPECT_NE(std::find(o9.begin(), o9.end(), b * b), o9.end());
    }

    try {
        orbit(*quaternions(), Quaternion{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
    }
}

TEST(Action, CentralizerExamples) {
    const auto h = quaternions();
    const auto c = centralizer(h, h->i());
    ASSERT_EQ(c.basis.size(), 2u);
    for (const auto& b : c.basis) EXPECT_EQ(b * h->i(), h->i() * b);

    const auto q = gaussian();
    const auto cq = centralizer(q, el(q, "2"));
    ASSERT_EQ(cq.basis.size(), 1u);
    EXPECT_TRUE(cq.basis[0].im == 0);

    const auto f = f4();
    const auto cf = centralizer(f, f->one());
    ASSERT_EQ(cf.basis.size(), 1u);
    EXPECT_EQ(cf.basis[0], f->one());
}

TEST(Action, ClassPolynomialExamples) {
    const auto h = quaternions();
    EXPECT_EQ(class_polynomial(h, h->i()), poly(h, {"1", "0", "1"}));
    const auto q = gaussian();
    EXPECT_EQ(class_polynomial(q, el(q, "1+i")), poly(q, {"-2", "0", "1"}));
    EXPECT_EQ(class_polynomial(q, q->zero()), poly(q, {"0", "1"}));
    const auto f = f4();
    EXPECT_EQ(class_polynomial(f, f->zero()), SkewPolynomial<FqField>::variable(f));
}

template <class F>
void check_action_laws_exhaustive(const FieldRef<F>& f) {
    const auto elems = f->elements();
    for (const auto& a : elems) {
        EXPECT_EQ(conjugate(*f, a, f->one()), a);
        for (const auto& b : elems) {
            if (is_zero(b)) continue;
            for (const auto& c : elems) {
                if (is_zero(c)) continue;
                ASSERT_EQ(conjugate(*f, a, b * c), conjugate(*f, conjugate(*f, a, c), b));
            }
            ASSERT_TRUE(same_class(*f, a, conjugate(*f, a, b)));
        }
    }
    // Orbits partition K and agree with same_class.
    for (const auto& a : elems) {
        const auto o = orbit(*f, a);
        for (const auto& c : elems) {
            const bool member = std::find(o.begin(), o.end(), c) != o.end();
            ASSERT_EQ(member, same_class(*f, a, c));
            ASSERT_EQ(member, class_of(*f, a) == class_of(*f, c));
        }
    }
}

TEST(Action, ActionLawsFinite) {
    check_action_laws_exhaustive(f4());
    check_action_laws_exhaustive(f4_delta());
    check_action_laws_exhaustive(f9());
    check_action_laws_exhaustive(f9_delta());
}

template <class F>
void check_action_laws_random(const FieldRef<F>& f, std::mt19937_64& rng) {
    for (int n = 0; n < 40; ++n) {
        const auto a = random_element(*f, rng), b = random_nonzero(*f, rng), c = random_nonzero(*f, rng);
        ASSERT_EQ(conjugate(*f, a, b * c), conjugate(*f, conjugate(*f, a, c), b));
        const auto x = conjugate(*f, a, b);
        ASSERT_TRUE(same_class(*f, a, x));
        ASSERT_TRUE(same_class(*f, x, a));
        ASSERT_EQ(class_of(*f, a), class_of(*f, x));
    }
}

TEST(Action, ActionLawsCharZero) {
    std::mt19937_64 rng(47);
    check_action_laws_random(gaussian(), rng);
    check_action_laws_random(gaussian(GaussianSigma::Conjugation, Gaussian{1, 3}), rng);
    check_action_laws_random(gaussian(GaussianSigma::Identity), rng);
    check_action_laws_random(quaternions(), rng);
    check_action_laws_random(quaternions(Quaternion{0, 1, 1, 0}), rng);
}

template <class F>
void check_class_polynomial_finite(const FieldRef<F>& f) {
    for (const auto& a : f->elements()) {
        const auto m = class_polynomial(f, a);
        ASSERT_TRUE(m.is_monic());
        for (const auto& c : f->elements()) ASSERT_EQ(is_zero(evaluate(m, c)), same_class(*f, a, c));
    }
}

TEST(Action, ClassPolynomialVanishesExactlyOnOrbitFinite) {
    check_class_polynomial_finite(f4());
    check_class_polynomial_finite(f4_delta());
    check_class_polynomial_finite(f9());
    check_class_polynomial_finite(f9_delta());
}

template <class F>
void check_class_polynomial_random(const FieldRef<F>& f, std::mt19937_64& rng) {
    for (int n = 0; n < 5; ++n) {
        const auto a = random_element(*f, rng);
        const auto m = class_polynomial(f, a);
        for (int k = 0; k < 20; ++k) ASSERT_TRUE(is_zero(evaluate(m, conjugate(*f, a, random_nonzero(*f, rng)))));
        int outside = 0;
        while (outside < 20) {
            const auto c = random_element(*f, rng);
            if (same_class(*f, a, c)) continue;
            ++outside;
            ASSERT_FALSE(is_zero(evaluate(m, c)));
        }
    }
}

TEST(Action, ClassPolynomialCharZero) {
    std::mt19937_64 rng(53);
    check_class_polynomial_random(gaussian(), rng);
    check_class_polynomial_random(gaussian(GaussianSigma::Identity), rng);
    check_class_polynomial_random(quaternions(), rng);
    // Inner derivations: classes are translates of the untwisted ones.
    check_class_polynomial_random(gaussian(GaussianSigma::Conjugation, Gaussian{2, 1}), rng);
    check_class_polynomial_random(quaternions(Quaternion{0, 1, 0, 2}), rng);
}

template <class F>
void check_centralizer(const FieldRef<F>& f, const typename F::Element& a) {
    const auto c = centralizer(f, a);
    for (const auto& b : c.basis) {
        ASSERT_EQ(conjugate(*f, a, b), a);
        for (const auto& b2 : c.basis) {
            const auto prod = b * b2;
            ASSERT_EQ(conjugate(*f, a, prod), a);
        }
    }
}

TEST(Action, CentralizerProperties) {
    std::mt19937_64 rng(59);
    for (const auto& f : {f4(), f4_delta(), f9(), f9_delta()})
        for (const auto& a : f->elements()) check_centralizer(f, a);
    const auto h = quaternions(Quaternion{0, 0, 1, 0});
    const auto q = gaussian();
    for (int n = 0; n < 10; ++n) {
        check_centralizer(h, random_element(*h, rng));
        check_centralizer(q, random_element(*q, rng));
    }
}
