#pragma once

#include <algorithm>
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

/// w + x i + y j + z k over Q.
struct Quaternion {
    Rational w, x, y, z;

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    bool is_real() const { return x == 0 && y == 0 && z == 0; }
    Quaternion conj() const { return {w, -x, -y, -z}; }
    Rational norm() const { return w * w + x * x + y * y + z * z; }
    Rational real_part() const { return w; }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion& operator+=(const Quaternion& b) { return *this = *this + b; }
    Quaternion& operator-=(const Quaternion& b) { return *this = *this - b; }
    Quaternion& operator*=(const Quaternion& b) { return *this = *this * b; }

    friend Quaternion inverse(const Quaternion& a) {
        if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in H");
        const Rational n = a.norm();
        return {a.w / n, -a.x / n, -a.y / n, -a.z / n};
    }
};

inline bool is_zero(const Quaternion& a) { return a.is_zero(); }

/// Rational quaternions with sigma = id (central T) and an optional inner derivation x -> c x - x c.
class QuaternionField {
   public:
    using Element = Quaternion;
    using Base = Rational;
    static constexpr bool is_finite = false;
    static constexpr std::string_view kind_name = "quaternion";

    explicit QuaternionField(std::optional<Element> derivation = std::nullopt)
        : derivation_(derivation && !derivation->is_zero() ? derivation : std::nullopt) {}

    QuaternionField with_derivation(std::optional<Element> c) const { return QuaternionField(c); }

    bool sigma_is_identity() const noexcept { return true; }
    std::size_t dimension() const noexcept { return 4; }

    Element zero() const { return {}; }
    Element one() const { return {1, 0, 0, 0}; }
    Element from_integer(long long v) const { return {Rational(v), 0, 0, 0}; }
    Element i() const { return {0, 1, 0, 0}; }
    Element j() const { return {0, 0, 1, 0}; }
    Element k() const { return {0, 0, 0, 1}; }

    bool owns(const Element&) const { return true; }

    Element sigma(const Element& a) const { return a; }
    Element sigma_inverse(const Element& a) const { return a; }
    Element delta(const Element& a) const {
        if (!derivation_) return zero();
        return *derivation_ * a - a * *derivation_;
    }
    const std::optional<Element>& derivation() const noexcept { return derivation_; }

    Base base_zero() const { return 0; }
    Base base_one() const { return 1; }
    std::vector<Base> coordinates(const Element& a) const { return {a.w, a.x, a.y, a.z}; }
    Element from_coordinates(std::span<const Base> c) const { return {c[0], c[1], c[2], c[3]}; }
    Element basis_element(std::size_t idx) const {
        switch (idx) {
            case 0: return one();
            case 1: return i();
            case 2: return j();
            default: return k();
        }
    }

    bool canonical_less(const Element& a, const Element& b) const {
        const auto x = coordinates(a), y = coordinates(b);
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }

    template <class Rng>
    Element random_element(Rng& rng, int bound = 5) const {
        return {detail::random_small_rational(rng, bound), detail::random_small_rational(rng, bound),
                detail::random_small_rational(rng, bound), detail::random_small_rational(rng, bound)};
    }

    std::string format(const Element& a) const {
        return detail::format_components<4>({a.w, a.x, a.y, a.z}, kUnits);
    }
    Element parse(std::string_view text) const {
        const auto c = detail::parse_components<4>(text, kUnits);
        return {c[0], c[1], c[2], c[3]};
    }

    std::string describe() const {
        std::string out = "H over Q (sigma=id";
        if (derivation_) out += ", delta_c with c=" + format(*derivation_);
        return out + ")";
    }

    friend bool operator==(const QuaternionField& a, const QuaternionField& b) { return a.derivation_ == b.derivation_; }

   private:
    static constexpr std::array<char, 4> kUnits{'1', 'i', 'j', 'k'};

    std::optional<Element> derivation_;
};

}  // namespace skewrat
