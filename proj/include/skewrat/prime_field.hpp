#pragma once

#include <cstdint>
#include <string>

#include "error.hpp"

namespace skewrat {

/// Element of F_p carrying its modulus, so matrices over F_p need no side context.
class Fp {
   public:
    Fp() = default;
    Fp(std::int64_t value, std::uint32_t p) : p_(p) {
        const std::int64_t m = static_cast<std::int64_t>(p);
        value %= m;
        if (value < 0) value += m;
        v_ = static_cast<std::uint32_t>(value);
    }

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend bool operator==(const Fp& a, const Fp& b) noexcept { return a.v_ == b.v_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        return raw((static_cast<std::uint64_t>(a.v_) + b.v_) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        return raw((static_cast<std::uint64_t>(a.v_) + p - b.v_) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        return raw((static_cast<std::uint64_t>(a.v_) * b.v_) % p, p);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }

    friend Fp inverse(const Fp& a) {
        if (a.v_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_" + std::to_string(a.p_));
        // a^(p-2)
        std::uint64_t result = 1, base = a.v_, e = a.p_ - 2;
        while (e) {
            if (e & 1) result = result * base % a.p_;
            base = base * base % a.p_;
            e >>= 1;
        }
        return raw(result, a.p_);
    }

    friend std::string to_string(const Fp& a) { return std::to_string(a.v_); }

   private:
    static Fp raw(std::uint64_t v, std::uint32_t p) {
        Fp out;
        out.v_ = static_cast<std::uint32_t>(v);
        out.p_ = p;
        return out;
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

inline bool is_zero(const Fp& a) noexcept { return a.is_zero(); }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace skewrat
