#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include <skewrat/skewrat.hpp>

namespace fixtures {

using namespace skewrat;

inline FieldRef<FqField> f4(std::optional<std::vector<std::uint32_t>> delta = std::nullopt) {
    return make_field(FqField(2, {1, 1, 1}, 1, std::move(delta)));
}
/// F_4 with delta_g.
inline FieldRef<FqField> f4_delta() { return f4(std::vector<std::uint32_t>{0, 1}); }

inline FieldRef<FqField> f9(std::optional<std::vector<std::uint32_t>> delta = std::nullopt) {
    return make_field(FqField(3, {2, 2, 1}, 1, std::move(delta)));
}
inline FieldRef<FqField> f9_delta() { return f9(std::vector<std::uint32_t>{0, 1}); }

inline FieldRef<GaussianField> gaussian(GaussianSigma s = GaussianSigma::Conjugation,
                                        std::optional<Gaussian> delta = std::nullopt) {
    return make_field(GaussianField(s, delta));
}
inline FieldRef<QuaternionField> quaternions(std::optional<Quaternion> delta = std::nullopt) {
    return make_field(QuaternionField(delta));
}

/// Polynomial from element literals, low-to-high.
template <class F>
SkewPolynomial<F> poly(const FieldRef<F>& field, std::initializer_list<const char*> coeffs) {
    std::vector<typename F::Element> out;
    for (const char* c : coeffs) out.push_back(field->parse(c));
    return {field, std::move(out)};
}

template <class F>
typename F::Element el(const FieldRef<F>& field, const char* literal) {
    return field->parse(literal);
}

template <class F, class Rng>
typename F::Element random_element(const F& field, Rng& rng) {
    if constexpr (F::is_finite)
        return field.random_element(rng);
    else
        return field.random_element(rng, 4);
}

template <class F, class Rng>
typename F::Element random_nonzero(const F& field, Rng& rng) {
    while (true) {
        auto x = random_element(field, rng);
        if (!is_zero(x)) return x;
    }
}

template <class F, class Rng>
SkewPolynomial<F> random_poly(const FieldRef<F>& field, Rng& rng, int degree) {
    std::vector<typename F::Element> c;
    for (int i = 0; i < degree; ++i) c.push_back(random_element(*field, rng));
    c.push_back(random_nonzero(*field, rng));
    return {field, std::move(c)};
}

template <class F, class Rng>
SkewPolynomial<F> random_monic(const FieldRef<F>& field, Rng& rng, int degree) {
    std::vector<typename F::Element> c;
    for (int i = 0; i < degree; ++i) c.push_back(random_element(*field, rng));
    c.push_back(field->one());
    return {field, std::move(c)};
}

/// Every polynomial of degree <= max_degree over a finite field, including 0.
template <class F>
std::vector<SkewPolynomial<F>> all_polys(const FieldRef<F>& field, int max_degree) {
    const auto elems = field->elements();
    std::vector<SkewPolynomial<F>> out;
    const std::size_t len = static_cast<std::size_t>(max_degree) + 1;
    std::vector<std::size_t> digits(len, 0);
    while (true) {
        std::vector<typename F::Element> c;
        for (auto d : digits) c.push_back(elems[d]);
        out.emplace_back(field, std::move(c));
        std::size_t i = 0;
        while (i < len && ++digits[i] == elems.size()) digits[i++] = 0;
        if (i == len) break;
    }
    return out;
}

/// Every monic polynomial of exactly the given degree over a finite field.
template <class F>
std::vector<SkewPolynomial<F>> all_monic(const FieldRef<F>& field, int degree) {
    std::vector<SkewPolynomial<F>> out;
    const auto tail = degree == 0 ? std::vector<SkewPolynomial<F>>{SkewPolynomial<F>(field)} : all_polys(field, degree - 1);
    for (const auto& t : tail) out.push_back(t + SkewPolynomial<F>::monomial(field, field->one(), degree));
    return out;
}

}  // namespace fixtures
