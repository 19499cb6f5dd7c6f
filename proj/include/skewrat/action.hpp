#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "skewpoly.hpp"

namespace skewrat {

/// ^b a = sigma(b) a b^-1 + delta(b) b^-1
template <SkewField F>
typename F::Element conjugate(const F& field, const typename F::Element& a, const typename F::Element& b) {
    if (is_zero(b)) throw Error(ErrorKind::ZeroConjugator, "conjugation by 0");
    const auto b_inv = inverse(b);
    return field.sigma(b) * a * b_inv + field.delta(b) * b_inv;
}

template <SkewField F>
std::vector<typename F::Element> orbit(const F& field, const typename F::Element& a) {
    if constexpr (FiniteSkewField<F>) {
        std::vector<char> seen(field.order(), 0);
        std::vector<typename F::Element> out;
        for (std::uint64_t idx = 0; idx < field.order(); ++idx) {
            const auto b = field.element_at(idx);
            if (is_zero(b)) continue;
            const auto c = conjugate(field, a, b);
            auto& flag = seen[field.index_of(c)];
            if (!flag) {
                flag = 1;
                out.push_back(c);
            }
        }
        std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return field.canonical_less(x, y); });
        return out;
    } else {
        (void)a;
        throw Error(ErrorKind::Unsupported, "orbit enumeration needs a finite field, got " + field.describe());
    }
}

namespace detail {

/// Classes for (sigma, delta_c) are the classes for (sigma, 0) translated by c.
template <SkewField F>
typename F::Element derivation_shift(const F& field) {
    return field.derivation() ? *field.derivation() : field.zero();
}

template <SkewField F>
std::string untwisted_invariant(const F& field, const typename F::Element& a) {
    if constexpr (std::is_same_v<F, QuaternionField>) {
        std::string out = "trace=" + format_rational(2 * a.real_part()) + ",norm=" + format_rational(a.norm());
        if (a.is_real()) out += ",central";
        return out;
    } else if constexpr (std::is_same_v<F, GaussianField>) {
        if (field.sigma_is_identity()) return "point=" + field.format(a);
        if (a.is_zero()) return "zero";
        return "norm=" + format_rational(a.norm());
    } else {
        (void)field;
        (void)a;
        static_assert(FiniteSkewField<F>, "no class invariant for this field");
        return {};
    }
}

}  // namespace detail

template <SkewField F>
bool same_class(const F& field, const typename F::Element& a, const typename F::Element& c) {
    if constexpr (FiniteSkewField<F>) {
        if (a == c) return true;
        for (std::uint64_t idx = 0; idx < field.order(); ++idx) {
            const auto b = field.element_at(idx);
            if (!is_zero(b) && conjugate(field, a, b) == c) return true;
        }
        return false;
    } else {
        const auto shift = detail::derivation_shift(field);
        const auto plain = field.with_derivation(std::nullopt);
        return detail::untwisted_invariant(plain, a - shift) == detail::untwisted_invariant(plain, c - shift);
    }
}

template <SkewField F>
struct ConjugacyClass {
    typename F::Element representative;
    std::string invariant;
    std::optional<std::vector<typename F::Element>> finite_orbit;

    friend bool operator==(const ConjugacyClass& x, const ConjugacyClass& y) { return x.invariant == y.invariant; }
};

template <SkewField F>
ConjugacyClass<F> class_of(const F& field, const typename F::Element& a) {
    if constexpr (FiniteSkewField<F>) {
        auto members = orbit(field, a);
        const std::string inv = "least=" + field.format(members.front());
        return {a, inv, std::move(members)};
    } else {
        const auto shift = detail::derivation_shift(field);
        const auto plain = field.with_derivation(std::nullopt);
        std::string inv = detail::untwisted_invariant(plain, a - shift);
        if (field.derivation()) inv = "shift=" + field.format(shift) + "," + inv;
        return {a, std::move(inv), std::nullopt};
    }
}

template <SkewField F>
struct Centralizer {
    typename F::Element representative;
    std::vector<typename F::Element> basis;
};

/// Kernel of b -> sigma(b) a - a b + delta(b).
template <SkewField F>
Centralizer<F> centralizer(const FieldRef<F>& field, const typename F::Element& a) {
    const auto op = linearize_rmul(field, a) * linearize_sigma(field) - linearize_lmul(field, a) + linearize_delta(field);
    return {a, op.kernel_basis()};
}

/// Monic polynomial whose right roots are exactly the class of a.
template <SkewField F>
SkewPolynomial<F> class_polynomial(const FieldRef<F>& field, const typename F::Element& a) {
    using Poly = SkewPolynomial<F>;
    if constexpr (FiniteSkewField<F>) {
        const auto members = orbit(*field, a);
        Poly acc = Poly::linear(field, members.front());
        for (std::size_t i = 1; i < members.size(); ++i) acc = llcm(acc, Poly::linear(field, members[i]));
        return acc;
    } else {
        const auto shift = detail::derivation_shift(*field);
        const auto plain = make_field(field->with_derivation(std::nullopt));
        const auto b = a - shift;
        std::vector<typename F::Element> coeffs;
        if constexpr (std::is_same_v<F, QuaternionField>) {
            if (b.is_real())
                coeffs = {-b, plain->one()};
            else
                coeffs = {Quaternion{b.norm(), 0, 0, 0}, Quaternion{-2 * b.real_part(), 0, 0, 0}, plain->one()};
        } else {
            if (plain->sigma_is_identity())
                coeffs = {-b, plain->one()};
            else if (b.is_zero())
                coeffs = {plain->zero(), plain->one()};
            else
                coeffs = {Gaussian{-b.norm(), 0}, plain->zero(), plain->one()};
        }
        if (!field->derivation()) return Poly(field, std::move(coeffs));
        // Read the untwisted polynomial in the variable T - shift, which obeys the untwisted rule.
        return shift_variable(Poly(field, std::move(coeffs)), shift);
    }
}

}  // namespace skewrat
