#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "../rationals.hpp"

namespace skewrat::detail {

/// Dense polynomial over Q, low-to-high, no trailing zeros.
using QPoly = std::vector<Rational>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rational qpoly_eval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    qpoly_trim(out);
    return out;
}

/// (quotient, remainder); d must be nonzero.
inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly p, const QPoly& d) {
    qpoly_trim(p);
    if (p.size() < d.size()) return {{}, p};
    QPoly quot(p.size() - d.size() + 1, Rational(0));
    while (!p.empty() && p.size() >= d.size()) {
        const std::size_t shift = p.size() - d.size();
        const Rational c = p.back() / d.back();
        quot[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * d[i];
        p.pop_back();
        qpoly_trim(p);
    }
    qpoly_trim(quot);
    return {quot, p};
}

/// Scales p to a primitive integer polynomial with the same roots.
inline std::vector<Integer> qpoly_primitive(const QPoly& p) {
    Integer lcm = 1;
    for (const auto& c : p) {
        const Integer d = denominator_of(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p) {
        out.push_back(numerator_of(c) * (lcm / denominator_of(c)));
        g = boost::multiprecision::gcd(g, out.back());
    }
    if (g > 1)
        for (auto& c : out) c /= g;
    return out;
}

inline Integer ipoly_eval(const std::vector<Integer>& p, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

/// Positive divisors of n != 0 by trial division, or nullopt when n cannot be fully factored within budget.
inline std::optional<std::vector<Integer>> positive_divisors(Integer n, std::uint64_t& budget) {
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer d = 2; d * d <= n; ++d) {
        if (budget == 0) return std::nullopt;
        --budget;
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Integer> divisors{1};
    for (const auto& [prime, e] : factors) {
        const std::size_t count = divisors.size();
        Integer power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
        }
        if (divisors.size() > budget) return std::nullopt;
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

struct RootSearch {
    std::vector<Rational> roots;  // distinct
    bool complete = true;
};

/// Distinct rational roots via the rational root theorem.
inline RootSearch rational_roots(QPoly p, std::uint64_t budget = 5'000'000) {
    qpoly_trim(p);
    RootSearch out;
    if (p.size() <= 1) return out;
    if (p.front() == 0) {
        out.roots.push_back(0);
        while (!p.empty() && p.front() == 0) p.erase(p.begin());
    }
    if (p.size() <= 1) return out;
    const auto ip = qpoly_primitive(p);
    const auto lead = positive_divisors(ip.back(), budget);
    const auto tail = positive_divisors(ip.front(), budget);
    if (!lead || !tail) {
        out.complete = false;
        return out;
    }
    for (const auto& num : *tail)
        for (const auto& den : *lead) {
            if (budget == 0) {
                out.complete = false;
                return out;
            }
            --budget;
            if (boost::multiprecision::gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                const Rational r(Integer(sign * num), den);
                if (qpoly_eval(p, r) == 0) out.roots.push_back(r);
            }
        }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

/// Monic T^2 + u T + v.
struct Quadratic {
    Rational u;
    Rational v;
    friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

struct QuadraticSearch {
    std::vector<Quadratic> factors;  // distinct, irreducible over Q
    bool complete = true;
};

/// Distinct monic quadratic factors of p that are irreducible over Q, by divisor search on
/// leading coefficient, constant term and one nonzero value p(t0).
inline QuadraticSearch quadratic_factors(QPoly p, std::uint64_t budget = 5'000'000) {
    qpoly_trim(p);
    QuadraticSearch out;
    while (!p.empty() && p.front() == 0) p.erase(p.begin());
    if (p.size() < 3) return out;
    const auto ip = qpoly_primitive(p);
    // Pick t0 != 0 minimizing |p(t0)| among a few candidates.
    std::optional<std::pair<Integer, Integer>> best;
    for (long t = 1; t <= 6; ++t)
        for (long s : {t, -t}) {
            const Integer value = ipoly_eval(ip, Integer(s));
            if (value == 0) continue;
            const Integer mag = value < 0 ? Integer(-value) : value;
            if (!best || mag < (best->second < 0 ? Integer(-best->second) : best->second)) best.emplace(Integer(s), value);
        }
    if (!best) {
        // p vanishes at +-1..6: more than 12 rational roots, so recurse on the cofactor.
        QPoly rest = p;
        for (long t = 1; t <= 6; ++t)
            for (long s : {t, -t}) rest = qpoly_divmod(rest, {Rational(-s), Rational(1)}).first;
        return quadratic_factors(rest, budget);
    }
    const auto lead = positive_divisors(ip.back(), budget);
    const auto tail = positive_divisors(ip.front(), budget);
    const auto vals = positive_divisors(best->second, budget);
    if (!lead || !tail || !vals) {
        out.complete = false;
        return out;
    }
    const Integer t0 = best->first;
    for (const auto& a : *lead)
        for (const auto& c_abs : *tail)
            for (int c_sign : {1, -1})
                for (const auto& d_abs : *vals)
                    for (int d_sign : {1, -1}) {
                        if (budget == 0) {
                            out.complete = false;
                            return out;
                        }
                        --budget;
                        const Integer c = c_sign * c_abs;
                        const Integer d = d_sign * d_abs;
                        const Integer rest = d - a * t0 * t0 - c;
                        if (rest % t0 != 0) continue;
                        const Integer b = rest / t0;
                        const Quadratic cand{Rational(b, a), Rational(c, a)};
                        const Rational disc = cand.u * cand.u - 4 * cand.v;
                        if (rational_sqrt(disc)) continue;
                        if (std::find(out.factors.begin(), out.factors.end(), cand) != out.factors.end()) continue;
                        if (qpoly_divmod(p, {cand.v, cand.u, Rational(1)}).second.empty()) out.factors.push_back(cand);
                    }
    return out;
}

}  // namespace skewrat::detail
