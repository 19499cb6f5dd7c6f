#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "prime_field.hpp"

namespace skewrat {

namespace detail {

// Dense polynomials over F_p as coefficient vectors, low-to-high, used for the modulus only.
using FpPoly = std::vector<std::uint32_t>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint32_t p) {
    fp_trim(a);
    const std::uint64_t lead_inv = inverse(Fp(m.back(), p)).value();
    while (a.size() >= m.size()) {
        const std::uint64_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * m[i] % p) % p);
        fp_trim(a);
    }
    return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool fp_is_irreducible(const FpPoly& m, std::uint32_t p) {
    const std::size_t n = m.size() - 1;
    if (n == 0) return false;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            FpPoly divisor(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            divisor[d] = 1;
            if (fp_mod(m, divisor, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Arithmetic of F_p[t]/(modulus). Elements are encoded as sum c_i p^i.
class FqArithmetic {
   public:
    static constexpr std::uint64_t kTableLimit = 256;
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

    FqArithmetic(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
        if (!is_prime(p_)) throw Error(ErrorKind::InvalidConfig, "p = " + std::to_string(p_) + " is not prime");
        for (auto& c : modulus_) c %= p_;
        if (modulus_.size() < 2) throw Error(ErrorKind::InvalidConfig, "modulus must have degree >= 1");
        if (modulus_.back() != 1) throw Error(ErrorKind::InvalidConfig, "modulus must be monic");
        n_ = modulus_.size() - 1;
        order_ = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            order_ *= p_;
            if (order_ > kMaxOrder) throw Error(ErrorKind::InvalidConfig, "field order exceeds 2^31");
        }
        if (!detail::fp_is_irreducible(modulus_, p_))
            throw Error(ErrorKind::InvalidConfig, "modulus is reducible over F_" + std::to_string(p_));
        if (order_ <= kTableLimit) build_tables();
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    std::size_t degree() const noexcept { return n_; }
    std::uint64_t order() const noexcept { return order_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::vector<std::uint32_t> decode(std::uint32_t code) const {
        std::vector<std::uint32_t> c(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            c[i] = code % p_;
            code /= p_;
        }
        return c;
    }

    std::uint32_t encode(std::span<const std::uint32_t> c) const {
        std::uint64_t code = 0;
        for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
        return static_cast<std::uint32_t>(code);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (!add_.empty()) return add_[a * order_ + b];
        auto x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < n_; ++i) x[i] = (x[i] + y[i]) % p_;
        return encode(x);
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (!neg_.empty()) return neg_[a];
        auto x = decode(a);
        for (auto& c : x) c = (p_ - c) % p_;
        return encode(x);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!mul_.empty()) return mul_[a * order_ + b];
        return mul_slow(a, b);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_q");
        if (!inv_.empty()) return inv_[a];
        return pow(a, order_ - 2);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t result = 1, base = a;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    bool same_as(const FqArithmetic& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

   private:
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        const auto x = decode(a), y = decode(b);
        detail::FpPoly prod(2 * n_ - 1, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
        auto r = detail::fp_mod(prod, modulus_, p_);
        r.resize(n_, 0);
        return encode(r);
    }

    void build_tables() {
        const std::size_t q = order_;
        add_.resize(q * q);
        mul_.resize(q * q);
        inv_.assign(q, 0);
        neg_.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                auto x = decode(a), y = decode(b);
                for (std::size_t i = 0; i < n_; ++i) x[i] = (x[i] + y[i]) % p_;
                add_[a * q + b] = encode(x);
                mul_[a * q + b] = mul_slow(a, b);
            }
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) inv_[a] = b;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                if (add_[a * q + b] == 0) neg_[a] = b;
    }

    std::uint32_t p_;
    std::vector<std::uint32_t> modulus_;
    std::size_t n_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint32_t> add_, mul_, inv_, neg_;
};

class FqElement {
   public:
    FqElement(std::shared_ptr<const FqArithmetic> ctx, std::uint32_t code) : ctx_(std::move(ctx)), code_(code) {}

    std::uint32_t code() const noexcept { return code_; }
    const std::shared_ptr<const FqArithmetic>& context() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return code_ == 0; }

    friend bool operator==(const FqElement& a, const FqElement& b) noexcept { return a.code_ == b.code_; }

    friend FqElement operator+(const FqElement& a, const FqElement& b) {
        a.check(b);
        return {a.ctx_, a.ctx_->add(a.code_, b.code_)};
    }
    friend FqElement operator-(const FqElement& a, const FqElement& b) {
        a.check(b);
        return {a.ctx_, a.ctx_->sub(a.code_, b.code_)};
    }
    friend FqElement operator*(const FqElement& a, const FqElement& b) {
        a.check(b);
        return {a.ctx_, a.ctx_->mul(a.code_, b.code_)};
    }
    FqElement operator-() const { return {ctx_, ctx_->neg(code_)}; }
    FqElement& operator+=(const FqElement& b) { return *this = *this + b; }
    FqElement& operator-=(const FqElement& b) { return *this = *this - b; }
    FqElement& operator*=(const FqElement& b) { return *this = *this * b; }

    friend FqElement inverse(const FqElement& a) { return {a.ctx_, a.ctx_->inv(a.code_)}; }

    bool compatible(const FqElement& b) const { return ctx_ == b.ctx_ || ctx_->same_as(*b.ctx_); }

   private:
    void check(const FqElement& b) const {
        if (ctx_ != b.ctx_ && !ctx_->same_as(*b.ctx_))
            throw Error(ErrorKind::MixedFields, "operands belong to different finite fields");
    }

    std::shared_ptr<const FqArithmetic> ctx_;
    std::uint32_t code_;
};

inline bool is_zero(const FqElement& a) noexcept { return a.is_zero(); }

/// F_q with sigma = x^(p^k) and an optional inner derivation x -> c x - sigma(x) c.
class FqField {
   public:
    using Element = FqElement;
    using Base = Fp;
    static constexpr bool is_finite = true;
    static constexpr std::string_view kind_name = "fq";
    static constexpr std::uint64_t kSigmaTableLimit = std::uint64_t{1} << 20;

    FqField(std::uint32_t p, std::vector<std::uint32_t> modulus, std::uint32_t frobenius_power,
            std::optional<std::vector<std::uint32_t>> derivation = std::nullopt)
        : ctx_(std::make_shared<const FqArithmetic>(p, std::move(modulus))), k_(frobenius_power) {
        if (k_ >= ctx_->degree())
            throw Error(ErrorKind::InvalidConfig, "frobenius_power must satisfy 0 <= k < n = " +
                                                      std::to_string(ctx_->degree()));
        if (ctx_->order() <= kSigmaTableLimit) {
            sigma_.resize(ctx_->order());
            sigma_inv_.resize(ctx_->order());
            for (std::uint32_t code = 0; code < ctx_->order(); ++code) sigma_[code] = frobenius(code, k_);
            for (std::uint32_t code = 0; code < ctx_->order(); ++code) sigma_inv_[sigma_[code]] = code;
        }
        if (derivation) {
            auto coeffs = *derivation;
            coeffs.resize(ctx_->degree(), 0);
            derivation_ = element(coeffs);
            if (derivation_->is_zero()) derivation_.reset();
        }
    }

    FqField with_derivation(std::optional<Element> c) const {
        FqField copy = *this;
        copy.derivation_ = (c && !c->is_zero()) ? c : std::nullopt;
        return copy;
    }

    const std::shared_ptr<const FqArithmetic>& arithmetic() const noexcept { return ctx_; }
    std::uint32_t characteristic() const noexcept { return ctx_->characteristic(); }
    std::uint32_t frobenius_power() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return ctx_->order(); }
    std::size_t dimension() const noexcept { return ctx_->degree(); }

    Element zero() const { return {ctx_, 0}; }
    Element one() const { return {ctx_, 1}; }
    Element from_integer(long long v) const {
        const long long p = ctx_->characteristic();
        long long r = v % p;
        if (r < 0) r += p;
        return {ctx_, static_cast<std::uint32_t>(r)};
    }
    /// The class of t in F_p[t]/(modulus).
    Element generator() const {
        std::vector<std::uint32_t> c(dimension(), 0);
        if (dimension() > 1)
            c[1] = 1;
        else
            c[0] = (ctx_->characteristic() - ctx_->modulus()[0]) % ctx_->characteristic();
        return element(c);
    }
    Element element(std::span<const std::uint32_t> coeffs) const {
        std::vector<std::uint32_t> c(coeffs.begin(), coeffs.end());
        c.resize(dimension(), 0);
        return {ctx_, ctx_->encode(c)};
    }
    Element element_at(std::uint64_t index) const { return {ctx_, static_cast<std::uint32_t>(index)}; }
    std::uint64_t index_of(const Element& a) const { return a.code(); }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(order());
        for (std::uint64_t i = 0; i < order(); ++i) out.push_back(element_at(i));
        std::sort(out.begin(), out.end(), [this](const Element& a, const Element& b) { return canonical_less(a, b); });
        return out;
    }

    bool owns(const Element& a) const { return a.context() == ctx_ || a.context()->same_as(*ctx_); }

    Element sigma(const Element& a) const {
        if (!sigma_.empty()) return {ctx_, sigma_[a.code()]};
        return {ctx_, frobenius(a.code(), k_)};
    }
    Element sigma_inverse(const Element& a) const {
        if (!sigma_inv_.empty()) return {ctx_, sigma_inv_[a.code()]};
        return {ctx_, frobenius(a.code(), static_cast<std::uint32_t>((dimension() - k_) % dimension()))};
    }
    Element delta(const Element& a) const {
        if (!derivation_) return zero();
        return *derivation_ * a - sigma(a) * *derivation_;
    }
    const std::optional<Element>& derivation() const noexcept { return derivation_; }
    bool sigma_is_identity() const noexcept { return k_ == 0; }

    Base base_zero() const { return Fp(0, ctx_->characteristic()); }
    Base base_one() const { return Fp(1, ctx_->characteristic()); }

    std::vector<Base> coordinates(const Element& a) const {
        std::vector<Base> out;
        for (auto c : ctx_->decode(a.code())) out.emplace_back(c, ctx_->characteristic());
        return out;
    }
    Element from_coordinates(std::span<const Base> coords) const {
        std::vector<std::uint32_t> c;
        for (const auto& b : coords) c.push_back(b.value());
        return element(c);
    }
    Element basis_element(std::size_t i) const {
        std::vector<std::uint32_t> c(dimension(), 0);
        c[i] = 1;
        return element(c);
    }

    /// Lexicographic on (c_0, c_1, ...).
    bool canonical_less(const Element& a, const Element& b) const {
        const auto x = ctx_->decode(a.code()), y = ctx_->decode(b.code());
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }

    template <class Rng>
    Element random_element(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, order() - 1);
        return element_at(dist(rng));
    }

    std::string format(const Element& a) const {
        const auto c = ctx_->decode(a.code());
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c[i]);
                continue;
            }
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += "g";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    /// "g^3+2*g+1", "-g+2", "[1,2,0,1]" (low-to-high). Powers of g beyond n-1 are reduced.
    Element parse(std::string_view text) const {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw Error(ErrorKind::UnknownLiteral, "empty F_q literal");
        const long long p = ctx_->characteristic();
        if (s.front() == '[') {
            if (s.back() != ']') throw Error(ErrorKind::UnknownLiteral, "unterminated coefficient list '" + s + "'");
            std::vector<std::uint32_t> coeffs;
            std::string_view body(s);
            body = body.substr(1, body.size() - 2);
            while (!body.empty()) {
                const auto comma = body.find(',');
                const auto item = body.substr(0, comma);
                coeffs.push_back(static_cast<std::uint32_t>(parse_int(item, s) % p));
                if (comma == std::string_view::npos) break;
                body.remove_prefix(comma + 1);
            }
            if (coeffs.size() > dimension())
                throw Error(ErrorKind::UnknownLiteral, "too many coefficients in '" + s + "'");
            return element(coeffs);
        }
        Element acc = zero();
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
            Element term = parse_term(std::string_view(s).substr(pos, end - pos), s);
            acc = negative ? acc - term : acc + term;
            pos = end;
        }
        return acc;
    }

    std::string describe() const {
        std::string m;
        for (std::size_t i = 0; i < ctx_->modulus().size(); ++i) m += (i ? "," : "") + std::to_string(ctx_->modulus()[i]);
        std::string out = "F_" + std::to_string(order()) + " (p=" + std::to_string(characteristic()) + ", modulus [" + m +
                          "], sigma=x^(p^" + std::to_string(k_) + ")";
        if (derivation_) out += ", delta_c with c=" + format(*derivation_);
        return out + ")";
    }

    friend bool operator==(const FqField& a, const FqField& b) {
        return (a.ctx_ == b.ctx_ || a.ctx_->same_as(*b.ctx_)) && a.k_ == b.k_ && a.derivation_ == b.derivation_;
    }

   private:
    std::uint32_t frobenius(std::uint32_t code, std::uint32_t times) const {
        for (std::uint32_t i = 0; i < times; ++i) code = ctx_->pow(code, ctx_->characteristic());
        return code;
    }

    static long long parse_int(std::string_view digits, const std::string& whole) {
        if (digits.empty() || digits.size() > 12) throw Error(ErrorKind::UnknownLiteral, "bad integer in '" + whole + "'");
        long long v = 0;
        bool negative = false;
        if (digits.front() == '-') {
            negative = true;
            digits.remove_prefix(1);
            if (digits.empty()) throw Error(ErrorKind::UnknownLiteral, "bad integer in '" + whole + "'");
        }
        for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw Error(ErrorKind::UnknownLiteral, "bad integer in '" + whole + "'");
            v = v * 10 + (ch - '0');
        }
        return negative ? -v : v;
    }

    // term := integer | [integer "*"] "g" ["^" integer]
    Element parse_term(std::string_view term, const std::string& whole) const {
        if (term.empty()) throw Error(ErrorKind::UnknownLiteral, "empty term in '" + whole + "'");
        const auto gpos = term.find('g');
        if (gpos == std::string_view::npos) return from_integer(parse_int(term, whole));
        long long coeff = 1;
        if (gpos > 0) {
            if (term[gpos - 1] != '*') throw Error(ErrorKind::UnknownLiteral, "expected '*' before g in '" + whole + "'");
            coeff = parse_int(term.substr(0, gpos - 1), whole);
        }
        std::uint64_t exponent = 1;
        auto rest = term.substr(gpos + 1);
        if (!rest.empty()) {
            if (rest.front() != '^') throw Error(ErrorKind::UnknownLiteral, "unexpected text after g in '" + whole + "'");
            const long long e = parse_int(rest.substr(1), whole);
            if (e < 0) throw Error(ErrorKind::UnknownLiteral, "negative power of g in '" + whole + "'");
            exponent = static_cast<std::uint64_t>(e);
        }
        return from_integer(coeff) * Element(ctx_, ctx_->pow(generator().code(), exponent));
    }

    std::shared_ptr<const FqArithmetic> ctx_;
    std::uint32_t k_;
    std::vector<std::uint32_t> sigma_, sigma_inv_;
    std::optional<Element> derivation_;
};

}  // namespace skewrat
