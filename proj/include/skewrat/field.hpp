#pragma once

#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fq.hpp"
#include "gaussian.hpp"
#include "matrix.hpp"
#include "quaternion.hpp"

namespace skewrat {

/// A skew field K together with sigma, a sigma-derivation delta, and a fixed basis over a base field B.
template <class F>
concept SkewField = requires(const F& f, const typename F::Element& a, std::span<const typename F::Base> coords) {
    typename F::Element;
    typename F::Base;
    { F::is_finite } -> std::convertible_to<bool>;
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_integer(1LL) } -> std::same_as<typename F::Element>;
    { f.sigma(a) } -> std::same_as<typename F::Element>;
    { f.sigma_inverse(a) } -> std::same_as<typename F::Element>;
    { f.delta(a) } -> std::same_as<typename F::Element>;
    { f.derivation() } -> std::convertible_to<const std::optional<typename F::Element>&>;
    { f.dimension() } -> std::convertible_to<std::size_t>;
    { f.coordinates(a) } -> std::same_as<std::vector<typename F::Base>>;
    { f.from_coordinates(coords) } -> std::same_as<typename F::Element>;
    { f.basis_element(std::size_t{0}) } -> std::same_as<typename F::Element>;
    { f.base_zero() } -> std::same_as<typename F::Base>;
    { f.base_one() } -> std::same_as<typename F::Base>;
    { f.canonical_less(a, a) } -> std::convertible_to<bool>;
    { f.format(a) } -> std::convertible_to<std::string>;
    { f.parse(std::string_view{}) } -> std::same_as<typename F::Element>;
    { f.owns(a) } -> std::convertible_to<bool>;
    { f.sigma_is_identity() } -> std::convertible_to<bool>;
    { a + a } -> std::same_as<typename F::Element>;
    { a - a } -> std::same_as<typename F::Element>;
    { a * a } -> std::same_as<typename F::Element>;
    { -a } -> std::same_as<typename F::Element>;
    { inverse(a) } -> std::same_as<typename F::Element>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { a == a } -> std::convertible_to<bool>;
};

/// Finite fields additionally enumerate their elements.
template <class F>
concept FiniteSkewField = SkewField<F> && F::is_finite && requires(const F& f, const typename F::Element& a) {
    { f.order() } -> std::convertible_to<std::uint64_t>;
    { f.elements() } -> std::same_as<std::vector<typename F::Element>>;
    { f.index_of(a) } -> std::convertible_to<std::uint64_t>;
    { f.element_at(std::uint64_t{0}) } -> std::same_as<typename F::Element>;
};

template <class F>
using FieldRef = std::shared_ptr<const F>;

template <class F>
FieldRef<F> make_field(F field) {
    return std::make_shared<const F>(std::move(field));
}

template <class F>
bool same_field(const FieldRef<F>& a, const FieldRef<F>& b) {
    return a == b || *a == *b;
}

template <class F>
void require_same_field(const FieldRef<F>& a, const FieldRef<F>& b) {
    if (!same_field(a, b)) throw Error(ErrorKind::MixedFields, "operands use different field descriptors");
}

enum class ArithOp { Add, Sub, Mul, Inv, Neg };

template <SkewField F>
typename F::Element arith(const F& field, ArithOp op, const typename F::Element& a,
                          const std::optional<typename F::Element>& b = std::nullopt) {
    if (!field.owns(a) || (b && !field.owns(*b)))
        throw Error(ErrorKind::MixedFields, "operand does not belong to " + field.describe());
    auto need_b = [&]() -> const typename F::Element& {
        if (!b) throw Error(ErrorKind::Unsupported, "binary operation needs a second operand");
        return *b;
    };
    switch (op) {
        case ArithOp::Add: return a + need_b();
        case ArithOp::Sub: return a - need_b();
        case ArithOp::Mul: return a * need_b();
        case ArithOp::Inv: return inverse(a);
        case ArithOp::Neg: return -a;
    }
    throw Error(ErrorKind::Unsupported, "unknown arithmetic operation");
}

/// (sigma(a), delta(a)).
template <SkewField F>
std::pair<typename F::Element, typename F::Element> twist(const F& field, const typename F::Element& a) {
    return {field.sigma(a), field.delta(a)};
}

template <SkewField F>
typename F::Element sigma_power(const F& field, typename F::Element a, long long n) {
    if (n >= 0)
        for (long long i = 0; i < n; ++i) a = field.sigma(a);
    else
        for (long long i = 0; i < -n; ++i) a = field.sigma_inverse(a);
    return a;
}

/// A base-field-linear map K -> K in the fixed basis of K over B.
template <SkewField F>
class LinearOperator {
   public:
    using Element = typename F::Element;
    using Base = typename F::Base;

    LinearOperator(FieldRef<F> field, Matrix<Base> matrix) : field_(std::move(field)), matrix_(std::move(matrix)) {}

    static LinearOperator identity(const FieldRef<F>& field) {
        return {field, Matrix<Base>::identity(field->dimension(), field->base_zero(), field->base_one())};
    }
    static LinearOperator zero(const FieldRef<F>& field) {
        return {field, Matrix<Base>(field->dimension(), field->dimension(), field->base_zero())};
    }

    /// Column i holds the coordinates of map(basis_i).
    template <class Map>
    static LinearOperator from_map(const FieldRef<F>& field, Map&& map) {
        const std::size_t n = field->dimension();
        Matrix<Base> m(n, n, field->base_zero());
        for (std::size_t i = 0; i < n; ++i) {
            const auto col = field->coordinates(map(field->basis_element(i)));
            m.set_column(i, col);
        }
        return {field, std::move(m)};
    }

    const FieldRef<F>& field() const noexcept { return field_; }
    const Matrix<Base>& matrix() const noexcept { return matrix_; }

    Element apply(const Element& x) const {
        const auto coords = field_->coordinates(x);
        const auto image = matrix_.apply(coords);
        return field_->from_coordinates(image);
    }

    bool is_invertible() const { return skewrat::is_invertible(matrix_); }

    /// Unique preimage of y, or nullopt when singular.
    std::optional<Element> solve(const Element& y) const {
        const auto rhs = field_->coordinates(y);
        auto x = solve_unique(matrix_, std::span<const Base>(rhs), field_->base_zero());
        if (!x) return std::nullopt;
        return field_->from_coordinates(*x);
    }

    /// Some preimage of y, or nullopt when y is outside the image.
    std::optional<Element> solve_any(const Element& y) const {
        const auto rhs = field_->coordinates(y);
        auto x = skewrat::solve_any(matrix_, std::span<const Base>(rhs), field_->base_zero());
        if (!x) return std::nullopt;
        return field_->from_coordinates(*x);
    }

    std::vector<Element> kernel_basis() const {
        std::vector<Element> out;
        for (const auto& v : nullspace(matrix_, field_->base_zero(), field_->base_one()))
            out.push_back(field_->from_coordinates(v));
        return out;
    }

    /// Composition: (a * b)(x) = a(b(x)).
    friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
        return {a.field_, a.matrix_ * b.matrix_};
    }
    friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
        return {a.field_, a.matrix_ + b.matrix_};
    }
    friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
        return {a.field_, a.matrix_ - b.matrix_};
    }
    friend bool operator==(const LinearOperator& a, const LinearOperator& b) { return a.matrix_ == b.matrix_; }

   private:
    FieldRef<F> field_;
    Matrix<Base> matrix_;
};

template <SkewField F>
LinearOperator<F> linearize_sigma(const FieldRef<F>& field) {
    return LinearOperator<F>::from_map(field, [&](const auto& x) { return field->sigma(x); });
}

template <SkewField F>
LinearOperator<F> linearize_delta(const FieldRef<F>& field) {
    return LinearOperator<F>::from_map(field, [&](const auto& x) { return field->delta(x); });
}

/// x -> a x
template <SkewField F>
LinearOperator<F> linearize_lmul(const FieldRef<F>& field, const typename F::Element& a) {
    return LinearOperator<F>::from_map(field, [&](const auto& x) { return a * x; });
}

/// x -> x a
template <SkewField F>
LinearOperator<F> linearize_rmul(const FieldRef<F>& field, const typename F::Element& a) {
    return LinearOperator<F>::from_map(field, [&](const auto& x) { return x * a; });
}

static_assert(SkewField<FqField>);
static_assert(FiniteSkewField<FqField>);
static_assert(SkewField<GaussianField>);
static_assert(SkewField<QuaternionField>);

}  // namespace skewrat
