#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "action.hpp"
#include "detail/qpoly.hpp"
#include "error.hpp"
#include "field.hpp"
#include "skewpoly.hpp"

namespace skewrat {

/// den^-1 * num with den monic and gcld(den, num) = 1.
template <SkewField F>
class SkewRationalFunction {
   public:
    using Poly = SkewPolynomial<F>;

    /// Trusted constructor; use normalize() for arbitrary pairs.
    SkewRationalFunction(Poly den, Poly num) : den_(std::move(den)), num_(std::move(num)) {}

    static SkewRationalFunction polynomial(Poly p) {
        auto field = p.field();
        return {Poly::one(field), std::move(p)};
    }
    static SkewRationalFunction zero(const FieldRef<F>& field) { return {Poly::one(field), Poly(field)}; }
    static SkewRationalFunction one(const FieldRef<F>& field) { return {Poly::one(field), Poly::one(field)}; }

    const Poly& den() const noexcept { return den_; }
    const Poly& num() const noexcept { return num_; }
    const FieldRef<F>& field() const noexcept { return den_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend bool operator==(const SkewRationalFunction& a, const SkewRationalFunction& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

   private:
    Poly den_;
    Poly num_;
};

template <SkewField F>
SkewRationalFunction<F> normalize(const SkewPolynomial<F>& a, const SkewPolynomial<F>& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is the zero polynomial");
    if (b.is_zero()) return SkewRationalFunction<F>::zero(a.field());
    const auto g = gcld(a, b);
    auto a1 = left_divide(a, g).quotient;
    auto b1 = left_divide(b, g).quotient;
    const auto u_inv = inverse(a1.leading());
    return {u_inv * a1, u_inv * b1};
}

template <SkewField F>
SkewRationalFunction<F> rat_add(const SkewRationalFunction<F>& f, const SkewRationalFunction<F>& g) {
    require_same_field(f.field(), g.field());
    const auto m = llcm_with_cofactors(f.den(), g.den());
    return normalize(m.multiple, poly_mul(m.left_p, f.num()) + poly_mul(m.left_q, g.num()));
}

template <SkewField F>
SkewRationalFunction<F> rat_neg(const SkewRationalFunction<F>& f) {
    return {f.den(), -f.num()};
}

template <SkewField F>
SkewRationalFunction<F> rat_sub(const SkewRationalFunction<F>& f, const SkewRationalFunction<F>& g) {
    return rat_add(f, rat_neg(g));
}

/// num_f den_g^-1 = c2^-1 b2 with c2 num_f = b2 den_g, so f g = (c2 den_f)^-1 (b2 num_g).
template <SkewField F>
SkewRationalFunction<F> rat_mul(const SkewRationalFunction<F>& f, const SkewRationalFunction<F>& g) {
    require_same_field(f.field(), g.field());
    if (f.is_zero() || g.is_zero()) return SkewRationalFunction<F>::zero(f.field());
    const auto m = llcm_with_cofactors(f.num(), g.den());
    return normalize(poly_mul(m.left_p, f.den()), poly_mul(m.left_q, g.num()));
}

template <SkewField F>
SkewRationalFunction<F> rat_inv(const SkewRationalFunction<F>& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of the zero function");
    return normalize(f.num(), f.den());
}

/// "(den)^-1*(num)", or the numerator alone when den = 1.
template <SkewField F>
std::string format_rational_function(const SkewRationalFunction<F>& f) {
    if (f.is_polynomial()) return format_polynomial(f.num());
    return "(" + format_polynomial(f.den()) + ")^-1*(" + format_polynomial(f.num()) + ")";
}

/// T_a(x) = sigma(x) a + delta(x)
template <SkewField F>
LinearOperator<F> point_operator(const FieldRef<F>& field, const typename F::Element& a) {
    return linearize_rmul(field, a) * linearize_sigma(field) + linearize_delta(field);
}

/// The base-field matrix of P(T_a) = sum lmul(p_m) T_a^m.
template <SkewField F>
struct EvalOperator {
    SkewPolynomial<F> poly;
    typename F::Element point;
    LinearOperator<F> op;
};

template <SkewField F>
EvalOperator<F> eval_operator(const SkewPolynomial<F>& p, const typename F::Element& a) {
    const auto& field = p.field();
    const auto ta = point_operator(field, a);
    auto acc = LinearOperator<F>::zero(field);
    auto power = LinearOperator<F>::identity(field);
    for (std::size_t m = 0; m < p.coefficients().size(); ++m) {
        if (m > 0) power = ta * power;
        if (!is_zero(p.coefficients()[m])) acc = acc + linearize_lmul(field, p.coefficients()[m]) * power;
    }
    return {p, a, std::move(acc)};
}

template <SkewField F>
bool is_defined_at(const SkewRationalFunction<F>& f, const typename F::Element& a) {
    return eval_operator(f.den(), a).op.is_invertible();
}

template <SkewField F>
typename F::Element evaluate_at(const SkewRationalFunction<F>& f, const typename F::Element& a) {
    const auto op = eval_operator(f.den(), a).op;
    auto x = op.solve(evaluate(f.num(), a));
    if (!x) throw Error(ErrorKind::UndefinedAtPoint, "undefined at " + f.field()->format(a));
    return *x;
}

enum class MetroStatus { Unique, NoSolution, NonUnique };

template <SkewField F>
struct MetroResult {
    MetroStatus status;
    std::optional<typename F::Element> value;  // set only when Unique
    bool solvable() const { return status != MetroStatus::NoSolution; }
};

/// sigma(x) c + delta(x) - b x = 1
template <SkewField F>
MetroResult<F> metro_solve(const FieldRef<F>& field, const typename F::Element& b, const typename F::Element& c) {
    const auto op = point_operator(field, c) - linearize_lmul(field, b);
    if (op.is_invertible()) return {MetroStatus::Unique, op.solve(field->one())};
    if (op.solve_any(field->one())) return {MetroStatus::NonUnique, std::nullopt};
    return {MetroStatus::NoSolution, std::nullopt};
}

/// sigma^-n(P(^{Q(a)} a))^-1 Q(a) for semi-invariant P of degree n.
template <SkewField F>
typename F::Element eval_semi_invariant(const SkewRationalFunction<F>& f, const typename F::Element& a) {
    const auto& field = *f.field();
    if (!is_semi_invariant(f.den())) throw Error(ErrorKind::NotSemiInvariant, "denominator is not semi-invariant");
    if (is_zero(evaluate(f.den(), a))) throw Error(ErrorKind::UndefinedAtPoint, "denominator vanishes at " + field.format(a));
    const auto qa = evaluate(f.num(), a);
    if (is_zero(qa)) return field.zero();
    const auto pc = evaluate(f.den(), conjugate(field, a, qa));
    return inverse(sigma_power(field, pc, -f.den().degree())) * qa;
}

/// Closed form for (T - b)^-1 at a; nullopt where undefined.
template <SkewField F>
std::optional<typename F::Element> linear_kernel(const F& field, const typename F::Element& b, const typename F::Element& a) {
    if constexpr (std::is_same_v<F, GaussianField>) {
        if (field.sigma_is_identity() || field.derivation())
            throw Error(ErrorKind::UnsupportedField, "needs Q(i) with sigma=conj and delta=0");
        const Rational gap = a.norm() - b.norm();
        if (gap == 0) return std::nullopt;
        return (a + b.conj()) * Gaussian{1 / gap, 0};
    } else if constexpr (std::is_same_v<F, QuaternionField>) {
        if (field.derivation()) throw Error(ErrorKind::UnsupportedField, "needs H with delta=0");
        const Quaternion denom = a * a - Quaternion{2 * b.real_part(), 0, 0, 0} * a + Quaternion{b.norm(), 0, 0, 0};
        if (denom.is_zero()) return std::nullopt;
        return (a - b.conj()) * inverse(denom);
    } else {
        (void)field;
        (void)b;
        (void)a;
        throw Error(ErrorKind::UnsupportedField, "closed form exists only for Q(i) and H");
    }
}

namespace detail {

/// Whether N(z) + b z + c = 0 has a solution z in Q(i).
inline bool gaussian_quadratic_has_root(const Gaussian& b, const Gaussian& c) {
    // z = x + iy: x^2 + y^2 + b1 x - b2 y + c1 = 0 and b2 x + b1 y + c2 = 0.
    const Rational &b1 = b.re, &b2 = b.im, &c1 = c.re, &c2 = c.im;
    if (b1 == 0 && b2 == 0) {
        if (c2 != 0) return false;
        if (c1 > 0) return false;
        const auto rep = rational_two_squares(-c1);
        if (rep.status == SearchStatus::Unknown) throw Error(ErrorKind::Unsupported, "sum-of-squares search exceeded budget");
        return rep.status == SearchStatus::Found;
    }
    // Parametrize the line and substitute into the circle: alpha s^2 + beta s + gamma = 0.
    Rational alpha, beta, gamma;
    if (b1 != 0) {
        // y = -(c2 + b2 x) / b1
        const Rational k = -b2 / b1, m = -c2 / b1;
        alpha = 1 + k * k;
        beta = 2 * k * m + b1 - b2 * k;
        gamma = m * m - b2 * m + c1;
    } else {
        // x = -c2 / b2, y free
        const Rational x = -c2 / b2;
        alpha = 1;
        beta = -b2;
        gamma = x * x + b1 * x + c1;
    }
    return rational_sqrt(beta * beta - 4 * alpha * gamma).has_value();
}

}  // namespace detail

/// Closed form for (T^2 + bT + c)^-1 at a over Q(i), sigma=conj.
inline Gaussian quadratic_kernel_gaussian(const GaussianField& field, const Gaussian& b, const Gaussian& c, const Gaussian& a) {
    if (field.sigma_is_identity() || field.derivation())
        throw Error(ErrorKind::UnsupportedField, "needs Q(i) with sigma=conj and delta=0");
    if (detail::gaussian_quadratic_has_root(b, c))
        throw Error(ErrorKind::ReducibleDenominator, "T^2 + bT + c has a right root");
    const Rational na = a.norm();
    const Rational denom = (Gaussian{na, 0} + c).norm() - na * b.norm();
    if (denom == 0) throw Error(ErrorKind::UndefinedAtPoint, "operator is singular at " + field.format(a));
    return (Gaussian{na, 0} - b * a + c.conj()) * Gaussian{1 / denom, 0};
}

template <SkewField F>
struct DomainReport {
    std::vector<ConjugacyClass<F>> excluded;
    bool complete = true;
};

namespace detail {

/// p * conj(p) with coefficients in Q, for H[T] or Q(i)[T] with commuting T.
template <class E>
QPoly norm_polynomial(const std::vector<E>& p) {
    std::vector<E> prod(p.empty() ? 0 : 2 * p.size() - 1, E{});
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) prod[i + j] += p[i] * p[j].conj();
    QPoly out;
    for (const auto& c : prod) {
        if constexpr (std::is_same_v<E, Quaternion>)
            out.push_back(c.w);
        else
            out.push_back(c.re);
    }
    qpoly_trim(out);
    return out;
}

/// |A(nu)|^2 - nu |B(nu)|^2 where P(T_a) = A(nu) + B(nu) T_a and T_a^2 = nu.
inline QPoly gaussian_conj_norm_polynomial(const std::vector<Gaussian>& p) {
    std::vector<Gaussian> even, odd;
    for (std::size_t m = 0; m < p.size(); ++m) (m % 2 == 0 ? even : odd).push_back(p[m]);
    QPoly out = norm_polynomial(even);
    QPoly shifted{Rational(0)};
    for (const auto& c : norm_polynomial(odd)) shifted.push_back(c);
    out.resize(std::max(out.size(), shifted.size()), Rational(0));
    for (std::size_t i = 0; i < shifted.size(); ++i) out[i] -= shifted[i];
    qpoly_trim(out);
    return out;
}

/// Candidate points, one per class that may hold a root of the untwisted denominator.
template <class F>
std::vector<typename F::Element> untwisted_candidates(const F& field, const std::vector<typename F::Element>& den,
                                                      bool& complete) {
    std::vector<typename F::Element> out;
    if constexpr (std::is_same_v<F, QuaternionField>) {
        const auto n = norm_polynomial(den);
        const auto roots = rational_roots(n);
        complete = complete && roots.complete;
        for (const auto& r : roots.roots) out.push_back({r, 0, 0, 0});
        const auto quads = quadratic_factors(n);
        complete = complete && quads.complete;
        for (const auto& q : quads.factors) {
            // T^2 - 2sT + n: s + v with |v|^2 = n - s^2 > 0.
            const Rational s = -q.u / 2;
            const Rational rest = q.v - s * s;
            if (rest <= 0) continue;
            const auto rep = rational_three_squares(rest);
            if (rep.status == SearchStatus::Unknown) complete = false;
            if (rep.status != SearchStatus::Found) continue;
            out.push_back({s, rep.parts[0], rep.parts[1], rep.parts[2]});
        }
    } else {
        if (field.sigma_is_identity()) {
            const auto n = norm_polynomial(den);
            const auto roots = rational_roots(n);
            complete = complete && roots.complete;
            for (const auto& r : roots.roots) out.push_back({r, 0});
            const auto quads = quadratic_factors(n);
            complete = complete && quads.complete;
            for (const auto& q : quads.factors) {
                const auto root = rational_sqrt(4 * q.v - q.u * q.u);
                if (!root) continue;
                out.push_back({-q.u / 2, *root / 2});
                out.push_back({-q.u / 2, -*root / 2});
            }
        } else {
            out.push_back(field.zero());
            const auto roots = rational_roots(gaussian_conj_norm_polynomial(den));
            complete = complete && roots.complete;
            for (const auto& nu : roots.roots) {
                if (nu <= 0) continue;
                const auto rep = rational_two_squares(nu);
                if (rep.status == SearchStatus::Unknown) complete = false;
                if (rep.status != SearchStatus::Found) continue;
                out.push_back({rep.parts[0], rep.parts[1]});
            }
        }
    }
    return out;
}

}  // namespace detail

/// Conjugacy classes on which f is undefined.
template <SkewField F>
DomainReport<F> domain_report(const SkewRationalFunction<F>& f) {
    const auto& field = f.field();
    DomainReport<F> report;
    if (f.den().degree() == 0) return report;
    if constexpr (FiniteSkewField<F>) {
        std::vector<char> seen(field->order(), 0);
        for (const auto& x : field->elements()) {
            if (seen[field->index_of(x)]) continue;
            auto cls = class_of(*field, x);
            for (const auto& y : *cls.finite_orbit) seen[field->index_of(y)] = 1;
            cls.representative = cls.finite_orbit->front();
            if (!is_defined_at(f, cls.representative)) report.excluded.push_back(std::move(cls));
        }
    } else {
        // Work in the untwisted ring: T' = T - c obeys T' x = sigma(x) T'.
        const auto shift = detail::derivation_shift(*field);
        const auto plain = make_field(field->with_derivation(std::nullopt));
        const auto den = shift_variable(SkewPolynomial<F>(plain, f.den().coefficients()), -shift);
        bool complete = true;
        for (const auto& point : detail::untwisted_candidates(*plain, den.coefficients(), complete)) {
            const auto rep = point + shift;
            if (is_defined_at(f, rep)) continue;
            auto cls = class_of(*field, rep);
            bool known = false;
            for (const auto& e : report.excluded) known = known || e == cls;
            if (!known) report.excluded.push_back(std::move(cls));
        }
        report.complete = complete;
    }
    return report;
}

/// h = f g at a equals f(^{g(a)} a) g(a), or 0 when g(a) = 0.
template <SkewField F>
bool product_formula_check(const SkewRationalFunction<F>& f, const SkewRationalFunction<F>& g, const typename F::Element& a) {
    const auto h = rat_mul(f, g);
    if (!is_defined_at(f, a) || !is_defined_at(g, a) || !is_defined_at(h, a))
        throw Error(ErrorKind::UndefinedAtPoint, "product formula needs f, g and fg defined at the point");
    const auto& field = *f.field();
    const auto ga = evaluate_at(g, a);
    const auto ha = evaluate_at(h, a);
    if (is_zero(ga)) return is_zero(ha);
    return ha == evaluate_at(f, conjugate(field, a, ga)) * ga;
}

/// defined((T-b)^-1, a) implies defined((T-d)^-1, c) for a ~ c and b ~ d.
template <SkewField F>
bool conjugate_transfer_check(const FieldRef<F>& field, const typename F::Element& a, const typename F::Element& b,
                              const typename F::Element& c, const typename F::Element& d) {
    if (!same_class(*field, a, c) || !same_class(*field, b, d))
        throw Error(ErrorKind::NotConjugate, "needs a ~ c and b ~ d");
    using Poly = SkewPolynomial<F>;
    const auto one = Poly::one(field);
    const SkewRationalFunction<F> fb(Poly::linear(field, b), one);
    const SkewRationalFunction<F> fd(Poly::linear(field, d), one);
    return !is_defined_at(fb, a) || is_defined_at(fd, c);
}

}  // namespace skewrat
