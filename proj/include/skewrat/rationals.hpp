#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace skewrat {

// Expression templates off: values are plain regular types, safe with auto and ternaries.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q == 0; }

inline Rational inverse(const Rational& q) {
    if (q == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in Q");
    return Rational(1) / q;
}

inline std::string format_rational(const Rational& q) {
    const Integer den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

/// Accepts "n", "-n", "n/d" with decimal digits only.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    const Integer n{std::string(num)};
    const Integer d{std::string(den)};
    if (d == 0) return std::nullopt;
    Rational r(n, d);
    return negative ? Rational(-r) : r;
}

inline Integer isqrt(const Integer& n) {
    if (n < 0) throw Error(ErrorKind::Unsupported, "square root of a negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    const Integer r = isqrt(n);
    return r * r == n;
}

/// Exact square root of a rational, when it is a square in Q.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const Integer n = numerator_of(q);
    const Integer d = denominator_of(q);
    if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
    return Rational(isqrt(n), isqrt(d));
}

/// Outcome of a bounded search: a witness, a proof of absence, or budget exhaustion.
enum class SearchStatus { Found, Absent, Unknown };

template <std::size_t N>
struct SquaresRepresentation {
    SearchStatus status = SearchStatus::Unknown;
    std::array<Rational, N> parts{};
};

namespace detail {

inline constexpr std::uint64_t kSquareSearchBudget = 20'000'000;

/// Finds a, b >= 0 with a^2 + b^2 = n by scanning a; the scan itself decides existence.
inline SquaresRepresentation<2> integer_two_squares(const Integer& n, std::uint64_t& budget) {
    SquaresRepresentation<2> out;
    if (n < 0) {
        out.status = SearchStatus::Absent;
        return out;
    }
    const Integer top = isqrt(n);
    if (top > Integer(budget)) return out;
    for (Integer a = 0; a <= top; ++a) {
        if (budget == 0) return out;
        --budget;
        const Integer rest = n - a * a;
        if (is_perfect_square(rest)) {
            out.status = SearchStatus::Found;
            out.parts = {Rational(a), Rational(isqrt(rest))};
            return out;
        }
    }
    out.status = SearchStatus::Absent;
    return out;
}

/// Legendre: n is a sum of three squares iff n is not 4^a (8b + 7).
inline bool integer_is_three_squares(Integer n) {
    if (n < 0) return false;
    if (n == 0) return true;
    while (n % 4 == 0) n /= 4;
    return n % 8 != 7;
}

}  // namespace detail

/// q = x^2 + y^2 with x, y rational. m/k is such a sum iff m*k is a sum of two integer squares.
inline SquaresRepresentation<2> rational_two_squares(const Rational& q) {
    SquaresRepresentation<2> out;
    if (q < 0) {
        out.status = SearchStatus::Absent;
        return out;
    }
    const Integer k = denominator_of(q);
    std::uint64_t budget = detail::kSquareSearchBudget;
    auto rep = detail::integer_two_squares(numerator_of(q) * k, budget);
    out.status = rep.status;
    if (rep.status == SearchStatus::Found) out.parts = {rep.parts[0] / k, rep.parts[1] / k};
    return out;
}

/// q = x^2 + y^2 + z^2 with x, y, z rational (Davenport-Cassels reduces this to integers).
inline bool rational_is_three_squares(const Rational& q) {
    if (q < 0) return false;
    return detail::integer_is_three_squares(numerator_of(q) * denominator_of(q));
}

inline SquaresRepresentation<3> rational_three_squares(const Rational& q) {
    SquaresRepresentation<3> out;
    if (!rational_is_three_squares(q)) {
        out.status = SearchStatus::Absent;
        return out;
    }
    const Integer k = denominator_of(q);
    const Integer n = numerator_of(q) * k;
    std::uint64_t budget = detail::kSquareSearchBudget;
    const Integer top = isqrt(n);
    for (Integer a = 0; a <= top; ++a) {
        if (budget == 0) return out;
        --budget;
        const Integer rest = n - a * a;
        if (!detail::integer_is_three_squares(rest)) continue;
        auto two = detail::integer_two_squares(rest, budget);
        if (two.status == SearchStatus::Found) {
            out.status = SearchStatus::Found;
            out.parts = {Rational(a) / k, two.parts[0] / k, two.parts[1] / k};
            return out;
        }
        if (two.status == SearchStatus::Unknown) return out;
    }
    return out;
}

}  // namespace skewrat
