#pragma once

#include <array>
#include <cctype>
#include <random>
#include <string>
#include <string_view>

#include "../error.hpp"
#include "../rationals.hpp"

namespace skewrat::detail {

/// Parses sums like "1-2i+3j-4/5k" into coordinates over the given unit symbols ("" is the real unit).
template <std::size_t N>
std::array<Rational, N> parse_components(std::string_view text, const std::array<char, N>& units) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(ErrorKind::UnknownLiteral, "empty literal");
    std::array<Rational, N> out{};
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw Error(ErrorKind::UnknownLiteral, "expected '+' or '-' in '" + s + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view term = std::string_view(s).substr(pos, end - pos);
        if (term.empty()) throw Error(ErrorKind::UnknownLiteral, "empty term in '" + s + "'");
        std::size_t slot = 0;
        const char last = term.back();
        if (std::isalpha(static_cast<unsigned char>(last))) {
            bool known = false;
            for (std::size_t u = 1; u < N; ++u)
                if (units[u] == last) {
                    slot = u;
                    known = true;
                }
            if (!known) throw Error(ErrorKind::UnknownLiteral, std::string("unknown unit '") + last + "' in '" + s + "'");
            term.remove_suffix(1);
            if (!term.empty() && term.back() == '*') term.remove_suffix(1);
        }
        Rational value = 1;
        if (!term.empty() || slot == 0) {
            auto parsed = parse_rational(term);
            if (!parsed) throw Error(ErrorKind::UnknownLiteral, "bad coefficient '" + std::string(term) + "' in '" + s + "'");
            value = *parsed;
        }
        out[slot] += negative ? Rational(-value) : value;
        pos = end;
    }
    return out;
}

template <std::size_t N>
std::string format_components(const std::array<Rational, N>& coords, const std::array<char, N>& units) {
    std::string out;
    for (std::size_t u = 0; u < N; ++u) {
        const Rational& c = coords[u];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (u == 0 || mag != 1) out += format_rational(mag);
        if (u != 0) out += units[u];
    }
    return out.empty() ? "0" : out;
}

template <class Rng>
Rational random_small_rational(Rng& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

}  // namespace skewrat::detail
