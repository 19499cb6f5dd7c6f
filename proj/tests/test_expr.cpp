#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace skewrat;
using namespace fixtures;

namespace {

using K = Ast::Kind;

Ast c(const char* lit) { return Ast::constant(lit); }
Ast t() { return Ast::variable(); }
Ast bin(K k, Ast a, Ast b) { return Ast::binary(k, std::move(a), std::move(b)); }

std::size_t syntax_offset(const char* text) {
    try {
        parse_expr(text);
    } catch (const SyntaxError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no syntax error for " << text;
    return 0;
}

Ast random_ast(std::mt19937_64& rng, int depth) {
    static const char* literals[] = {"1", "i", "-2/3+i", "0", "3/2-1/5i", "-1"};
    const auto pick = rng() % (depth <= 0 ? 2 : 6);
    switch (pick) {
        case 0: return t();
        case 1: return c(literals[rng() % 6]);
        case 2: return bin(K::Add, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 3: return bin(K::Sub, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 4: return bin(K::Mul, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        default: return Ast::power(random_ast(rng, depth - 1), static_cast<long>(rng() % 7) - 3);
    }
}

template <class F>
SkewRationalFunction<F> random_function(const FieldRef<F>& field, std::mt19937_64& rng, int den, int num) {
    return normalize(random_monic(field, rng, static_cast<int>(rng() % (den + 1))),
                     random_poly(field, rng, static_cast<int>(rng() % (num + 1))));
}

}  // namespace

TEST(Expr, ParseExamples) {
    EXPECT_EQ(parse_expr("T"), t());
    EXPECT_EQ(parse_expr("(T-{i})^-1 * (T+{1})"),
              bin(K::Mul, Ast::power(bin(K::Sub, t(), c("i")), -1), bin(K::Add, t(), c("1"))));
    EXPECT_EQ(parse_expr("T^-2"), Ast::power(t(), -2));
    const auto q = gaussian();
    EXPECT_EQ(lower(parse_expr("T^-2"), q), rat_inv(SkewRationalFunction<GaussianField>::polynomial(poly(q, {"0", "0", "1"}))));
}

TEST(Expr, AssociatesLeftAndKeepsOrder) {
    EXPECT_EQ(parse_expr("T*{i}*{2}"), bin(K::Mul, bin(K::Mul, t(), c("i")), c("2")));
    EXPECT_EQ(parse_expr("T-{1}-{2}"), bin(K::Sub, bin(K::Sub, t(), c("1")), c("2")));
    EXPECT_EQ(parse_expr("T+{1}*T^2"), bin(K::Add, t(), bin(K::Mul, c("1"), Ast::power(t(), 2))));
}

TEST(Expr, WhitespaceInsignificant) {
    EXPECT_EQ(parse_expr(" ( T - { i } ) ^ - 1 \t* T"), parse_expr("(T-{i})^-1*T"));
}

TEST(Expr, SyntaxErrorsCarryOffsets) {
    EXPECT_EQ(syntax_offset("T +"), 3u);
    EXPECT_EQ(syntax_offset("{1"), 0u);
    EXPECT_EQ(syntax_offset("T^x"), 2u);
    EXPECT_EQ(syntax_offset("T)"), 1u);
    EXPECT_EQ(syntax_offset("-T"), 0u);
    EXPECT_EQ(syntax_offset("(T"), 2u);
    EXPECT_EQ(syntax_offset(""), 0u);
    EXPECT_EQ(syntax_offset("T^2^3"), 3u);
    EXPECT_EQ(syntax_offset("x"), 0u);
    try {
        parse_expr("T**T");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    }
}

TEST(Expr, LoweringErrors) {
    const auto q = gaussian();
    try {
        lower("T + {q}", q);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownLiteral);
        EXPECT_NE(std::string(e.what()).find("offset 5"), std::string::npos);
    }
    for (const char* text : {"{0}^-1", "(T-T)^-2", "T*(T-T)^-1"}) {
        try {
            lower(text, q);
            FAIL() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ZeroInverse);
        }
    }
}

TEST(Expr, LowerExamples) {
    const auto h = quaternions();
    const auto sq = lower("T*T + {1}", h);
    EXPECT_TRUE(sq.is_polynomial());
    EXPECT_EQ(sq.den(), SkewPolynomial<QuaternionField>::one(h));
    EXPECT_EQ(sq.num(), poly(h, {"1", "0", "1"}));
    EXPECT_EQ(lower("(T-{i})^-1*(T-{i})", h), SkewRationalFunction<QuaternionField>::one(h));

    const auto q = gaussian();
    const auto f = lower("({2}*T - {2})^-1", q);
    EXPECT_EQ(f.den(), poly(q, {"-1", "1"}));
    EXPECT_EQ(f.num(), poly(q, {"1/2"}));
    EXPECT_EQ(lower("T^0", q), SkewRationalFunction<GaussianField>::one(q));
    EXPECT_EQ(lower("(T+{1})^3", q), lower("(T+{1})*(T+{1})*(T+{1})", q));
    EXPECT_EQ(lower("(T+{i})^-2", q), rat_inv(lower("(T+{i})*(T+{i})", q)));
}

TEST(Expr, NoncommutativeOrderPreserved) {
    const auto q = gaussian();
    const auto a = lower("T*{i}", q), b = lower("{i}*T", q);
    EXPECT_NE(a, b);
    EXPECT_EQ(a.num(), poly(q, {"0", "-i"}));
    EXPECT_EQ(b.num(), poly(q, {"0", "i"}));
}

TEST(Expr, PrintParseRoundTripRandomTrees) {
    std::mt19937_64 rng(101);
    for (int n = 0; n < 500; ++n) {
        const auto ast = random_ast(rng, 4);
        const auto text = format_expr(ast);
        ASSERT_EQ(parse_expr(text), ast) << text;
    }
}

template <class F>
void check_rational_round_trip(const FieldRef<F>& field, std::mt19937_64& rng, int rounds) {
    for (int n = 0; n < rounds; ++n) {
        const auto f = random_function(field, rng, 2, 2);
        const auto text = format_rational_function(f);
        ASSERT_EQ(lower(text, field), f) << text;
    }
}

TEST(Expr, CanonicalOutputRoundTrips) {
    std::mt19937_64 rng(103);
    check_rational_round_trip(f4(), rng, 100);
    check_rational_round_trip(f9_delta(), rng, 100);
    check_rational_round_trip(gaussian(), rng, 30);
    check_rational_round_trip(gaussian(GaussianSigma::Identity), rng, 30);
    check_rational_round_trip(quaternions(), rng, 20);
}

TEST(Expr, LoweringIsAHomomorphism) {
    // Lowering a random tree agrees with the same tree assembled by hand from rational operations.
    std::mt19937_64 rng(107);
    const auto q = gaussian();
    for (int n = 0; n < 100; ++n) {
        const auto a = random_function(q, rng, 1, 1), b = random_function(q, rng, 1, 1);
        const std::string sa = "(" + format_rational_function(a) + ")", sb = "(" + format_rational_function(b) + ")";
        ASSERT_EQ(lower(sa + "*" + sb, q), rat_mul(a, b));
        ASSERT_EQ(lower(sa + "-" + sb, q), rat_sub(a, b));
        if (!b.is_zero()) ASSERT_EQ(lower(sa + "*" + sb + "^-1", q), rat_mul(a, rat_inv(b)));
    }
}
