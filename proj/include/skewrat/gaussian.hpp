#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detail/literal.hpp"
#include "error.hpp"
#include "rationals.hpp"

namespace skewrat {

/// re + im*i with exact rational parts.
struct Gaussian {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }
    Gaussian conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend bool operator==(const Gaussian&, const Gaussian&) = default;
    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Gaussian operator-() const { return {-re, -im}; }
    Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
    Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
    Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }

    friend Gaussian inverse(const Gaussian& a) {
        if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in Q(i)");
        const Rational n = a.norm();
        return {a.re / n, -a.im / n};
    }
};

inline bool is_zero(const Gaussian& a) { return a.is_zero(); }

enum class GaussianSigma { Conjugation, Identity };

/// Q(i) with sigma in {conjugation, identity} and an optional inner derivation.
class GaussianField {
   public:
    using Element = Gaussian;
    using Base = Rational;
    static constexpr bool is_finite = false;
    static constexpr std::string_view kind_name = "gaussian";

    explicit GaussianField(GaussianSigma sigma = GaussianSigma::Conjugation, std::optional<Element> derivation = std::nullopt)
        : sigma_(sigma), derivation_(derivation && !derivation->is_zero() ? derivation : std::nullopt) {}

    GaussianField with_derivation(std::optional<Element> c) const { return GaussianField(sigma_, c); }

    GaussianSigma sigma_kind() const noexcept { return sigma_; }
    bool sigma_is_identity() const noexcept { return sigma_ == GaussianSigma::Identity; }
    std::size_t dimension() const noexcept { return 2; }

    Element zero() const { return {}; }
    Element one() const { return {1, 0}; }
    Element from_integer(long long v) const { return {Rational(v), 0}; }
    Element i() const { return {0, 1}; }

    bool owns(const Element&) const { return true; }

    Element sigma(const Element& a) const { return sigma_is_identity() ? a : a.conj(); }
    Element sigma_inverse(const Element& a) const { return sigma(a); }
    Element delta(const Element& a) const {
        if (!derivation_) return zero();
        return *derivation_ * a - sigma(a) * *derivation_;
    }
    const std::optional<Element>& derivation() const noexcept { return derivation_; }

    Base base_zero() const { return 0; }
    Base base_one() const { return 1; }
    std::vector<Base> coordinates(const Element& a) const { return {a.re, a.im}; }
    Element from_coordinates(std::span<const Base> c) const { return {c[0], c[1]}; }
    Element basis_element(std::size_t idx) const { return idx == 0 ? one() : i(); }

    bool canonical_less(const Element& a, const Element& b) const {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    }

    template <class Rng>
    Element random_element(Rng& rng, int bound = 5) const {
        return {detail::random_small_rational(rng, bound), detail::random_small_rational(rng, bound)};
    }

    std::string format(const Element& a) const { return detail::format_components<2>({a.re, a.im}, kUnits); }
    Element parse(std::string_view text) const {
        const auto c = detail::parse_components<2>(text, kUnits);
        return {c[0], c[1]};
    }

    std::string describe() const {
        std::string out = std::string("Q(i) (sigma=") + (sigma_is_identity() ? "id" : "conj");
        if (derivation_) out += ", delta_c with c=" + format(*derivation_);
        return out + ")";
    }

    friend bool operator==(const GaussianField& a, const GaussianField& b) {
        return a.sigma_ == b.sigma_ && a.derivation_ == b.derivation_;
    }

   private:
    static constexpr std::array<char, 2> kUnits{'1', 'i'};

    GaussianSigma sigma_;
    std::optional<Element> derivation_;
};

}  // namespace skewrat
