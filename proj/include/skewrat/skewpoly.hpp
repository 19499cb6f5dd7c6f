#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace skewrat {

/// An element of K[T; sigma, delta], coefficients low-to-high, no trailing zeros.
template <SkewField F>
class SkewPolynomial {
   public:
    using Element = typename F::Element;

    explicit SkewPolynomial(FieldRef<F> field) : field_(std::move(field)) {}
    SkewPolynomial(FieldRef<F> field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static SkewPolynomial constant(const FieldRef<F>& field, const Element& c) { return {field, {c}}; }
    static SkewPolynomial one(const FieldRef<F>& field) { return constant(field, field->one()); }
    static SkewPolynomial variable(const FieldRef<F>& field) { return {field, {field->zero(), field->one()}}; }
    static SkewPolynomial monomial(const FieldRef<F>& field, const Element& c, std::size_t degree) {
        std::vector<Element> coeffs(degree + 1, field->zero());
        coeffs[degree] = c;
        return {field, std::move(coeffs)};
    }
    /// T - a
    static SkewPolynomial linear(const FieldRef<F>& field, const Element& a) { return {field, {-a, field->one()}}; }

    const FieldRef<F>& field() const noexcept { return field_; }
    const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const Element& leading() const { return coeffs_.back(); }
    Element coeff(std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : field_->zero(); }
    bool is_monic() const { return !is_zero() && leading() == field_->one(); }
    bool is_constant() const { return degree() <= 0; }

    friend bool operator==(const SkewPolynomial& a, const SkewPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b) {
        require_same_field(a.field_, b.field_);
        std::vector<Element> out = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
        const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
        for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return {a.field_, std::move(out)};
    }
    SkewPolynomial operator-() const {
        std::vector<Element> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(-c);
        return {field_, std::move(out)};
    }
    friend SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b) { return a + (-b); }

    /// c * P, scaling coefficients on the left (no commutation needed).
    friend SkewPolynomial operator*(const Element& c, const SkewPolynomial& p) {
        std::vector<Element> out;
        out.reserve(p.coeffs_.size());
        for (const auto& x : p.coeffs_) out.push_back(c * x);
        return {p.field_, std::move(out)};
    }

    friend SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b) { return poly_mul(a, b); }

    /// T * P, using T a = sigma(a) T + delta(a).
    SkewPolynomial times_variable() const {
        if (is_zero()) return *this;
        std::vector<Element> out(coeffs_.size() + 1, field_->zero());
        for (std::size_t m = 0; m < coeffs_.size(); ++m) {
            out[m + 1] += field_->sigma(coeffs_[m]);
            out[m] += field_->delta(coeffs_[m]);
        }
        return {field_, std::move(out)};
    }

   private:
    void trim() {
        while (!coeffs_.empty() && is_zero_element(coeffs_.back())) coeffs_.pop_back();
    }
    static bool is_zero_element(const Element& e) { return skewrat::is_zero(e); }

    FieldRef<F> field_;
    std::vector<Element> coeffs_;
};

template <SkewField F>
SkewPolynomial<F> poly_mul(const SkewPolynomial<F>& p, const SkewPolynomial<F>& q) {
    require_same_field(p.field(), q.field());
    SkewPolynomial<F> acc(p.field());
    if (p.is_zero() || q.is_zero()) return acc;
    SkewPolynomial<F> shifted = q;  // T^m * Q
    for (std::size_t m = 0; m < p.coefficients().size(); ++m) {
        if (m > 0) shifted = shifted.times_variable();
        if (!is_zero(p.coefficients()[m])) acc = acc + p.coefficients()[m] * shifted;
    }
    return acc;
}

template <SkewField F>
struct Division {
    SkewPolynomial<F> quotient;
    SkewPolynomial<F> remainder;
};

/// p = quotient * d + remainder, deg remainder < deg d.
template <SkewField F>
Division<F> right_divide(const SkewPolynomial<F>& p, const SkewPolynomial<F>& d) {
    require_same_field(p.field(), d.field());
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "right division by the zero polynomial");
    const auto& field = p.field();
    SkewPolynomial<F> quotient(field);
    SkewPolynomial<F> rest = p;
    if (p.degree() < d.degree()) return {quotient, rest};
    // shifts[k] = T^k * d
    std::vector<SkewPolynomial<F>> shifts{d};
    const long top = p.degree() - d.degree();
    for (long k = 1; k <= top; ++k) shifts.push_back(shifts.back().times_variable());
    while (!rest.is_zero() && rest.degree() >= d.degree()) {
        const long k = rest.degree() - d.degree();
        const auto c = rest.leading() * inverse(shifts[k].leading());
        rest = rest - c * shifts[k];
        quotient = quotient + SkewPolynomial<F>::monomial(field, c, static_cast<std::size_t>(k));
    }
    return {quotient, rest};
}

/// p = d * quotient + remainder, deg remainder < deg d. Needs sigma bijective.
template <SkewField F>
Division<F> left_divide(const SkewPolynomial<F>& p, const SkewPolynomial<F>& d) {
    require_same_field(p.field(), d.field());
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "left division by the zero polynomial");
    const auto& field = p.field();
    SkewPolynomial<F> quotient(field);
    SkewPolynomial<F> rest = p;
    const auto lead_inv = inverse(d.leading());
    while (!rest.is_zero() && rest.degree() >= d.degree()) {
        const long k = rest.degree() - d.degree();
        // d_m sigma^m(c) = lc(rest)
        const auto c = sigma_power(*field, lead_inv * rest.leading(), -d.degree());
        const auto term = SkewPolynomial<F>::monomial(field, c, static_cast<std::size_t>(k));
        rest = rest - poly_mul(d, term);
        quotient = quotient + term;
    }
    return {quotient, rest};
}

/// Remainder of p on right division by T - a.
template <SkewField F>
typename F::Element evaluate(const SkewPolynomial<F>& p, const typename F::Element& a) {
    const auto rem = right_divide(p, SkewPolynomial<F>::linear(p.field(), a)).remainder;
    return rem.coeff(0);
}

/// u * p with u = lc(p)^-1, so the result is monic.
template <SkewField F>
SkewPolynomial<F> monic_left(const SkewPolynomial<F>& p) {
    if (p.is_zero()) return p;
    return inverse(p.leading()) * p;
}

/// p * u with u = sigma^-n(lc(p)^-1), so the result is monic.
template <SkewField F>
SkewPolynomial<F> monic_right(const SkewPolynomial<F>& p) {
    if (p.is_zero()) return p;
    const auto u = sigma_power(*p.field(), inverse(p.leading()), -p.degree());
    return poly_mul(p, SkewPolynomial<F>::constant(p.field(), u));
}

template <SkewField F>
SkewPolynomial<F> gcrd(SkewPolynomial<F> a, SkewPolynomial<F> b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "gcrd(0, 0) is undefined");
    while (!b.is_zero()) {
        auto r = right_divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic_left(a);
}

template <SkewField F>
SkewPolynomial<F> gcld(SkewPolynomial<F> a, SkewPolynomial<F> b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "gcld(0, 0) is undefined");
    while (!b.is_zero()) {
        auto r = left_divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic_right(a);
}

/// multiple = left_p * p = left_q * q, monic and of least degree.
template <SkewField F>
struct LeftMultiple {
    SkewPolynomial<F> multiple;
    SkewPolynomial<F> left_p;
    SkewPolynomial<F> left_q;
};

template <SkewField F>
LeftMultiple<F> llcm_with_cofactors(const SkewPolynomial<F>& p, const SkewPolynomial<F>& q) {
    require_same_field(p.field(), q.field());
    if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "llcm needs nonzero operands");
    const auto& field = p.field();
    // Invariant: r = u * p + v * q for both the previous and the current row.
    SkewPolynomial<F> r_prev = p, r = q;
    SkewPolynomial<F> u_prev = SkewPolynomial<F>::one(field), u(field);
    SkewPolynomial<F> v_prev(field), v = SkewPolynomial<F>::one(field);
    while (true) {
        auto [quot, rem] = right_divide(r_prev, r);
        auto u_next = u_prev - poly_mul(quot, u);
        auto v_next = v_prev - poly_mul(quot, v);
        if (rem.is_zero()) {
            // u_next * p + v_next * q = 0
            const auto unit = inverse(poly_mul(u_next, p).leading());
            auto left_p = unit * u_next;
            auto left_q = -(unit * v_next);
            auto multiple = poly_mul(left_p, p);
            return {std::move(multiple), std::move(left_p), std::move(left_q)};
        }
        r_prev = std::move(r);
        r = std::move(rem);
        u_prev = std::exchange(u, std::move(u_next));
        v_prev = std::exchange(v, std::move(v_next));
    }
}

template <SkewField F>
SkewPolynomial<F> llcm(const SkewPolynomial<F>& p, const SkewPolynomial<F>& q) {
    return llcm_with_cofactors(p, q).multiple;
}

/// P(T) a = sigma^n(a) P(T) for every basis element a; both sides are additive and
/// base-field linear in a, so the basis suffices for P(T) K subset K P(T).
template <SkewField F>
bool is_semi_invariant(const SkewPolynomial<F>& p) {
    if (p.is_zero()) return true;
    const auto& field = p.field();
    for (std::size_t i = 0; i < field->dimension(); ++i) {
        const auto a = field->basis_element(i);
        const auto lhs = poly_mul(p, SkewPolynomial<F>::constant(field, a));
        const auto rhs = sigma_power(*field, a, p.degree()) * p;
        if (!(lhs == rhs)) return false;
    }
    return true;
}

/// Sum p_k (T - c)^k, i.e. reads p as a polynomial in the shifted variable T - c.
template <SkewField F>
SkewPolynomial<F> shift_variable(const SkewPolynomial<F>& p, const typename F::Element& c) {
    const auto& field = p.field();
    const auto step = SkewPolynomial<F>::linear(field, c);
    SkewPolynomial<F> acc(field), power = SkewPolynomial<F>::one(field);
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (k > 0) power = poly_mul(power, step);
        acc = acc + p.coefficients()[k] * power;
    }
    return acc;
}

/// "T^2 + {1-i}*T + {3}"; element literals are always braced.
template <SkewField F>
std::string format_polynomial(const SkewPolynomial<F>& p) {
    if (p.is_zero()) return "{0}";
    const auto& field = *p.field();
    std::string out;
    for (long m = p.degree(); m >= 0; --m) {
        const auto& c = p.coefficients()[static_cast<std::size_t>(m)];
        if (is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        const bool unit = c == field.one();
        if (m == 0) {
            out += "{" + field.format(c) + "}";
            continue;
        }
        if (!unit) out += "{" + field.format(c) + "}*";
        out += "T";
        if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
}

}  // namespace skewrat
