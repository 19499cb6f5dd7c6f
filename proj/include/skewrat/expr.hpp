#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace skewrat {

/// Expression tree. Element literals stay as text until lowering, where the field parses them.
struct Ast {
    enum class Kind { Const, Var, Add, Sub, Mul, Pow };

    Kind kind = Kind::Var;
    std::string literal;   // Const
    long exponent = 0;     // Pow
    std::size_t offset = 0;
    std::vector<Ast> children;

    static Ast constant(std::string text, std::size_t at = 0) {
        Ast a;
        a.kind = Kind::Const;
        a.literal = std::move(text);
        a.offset = at;
        return a;
    }
    static Ast variable(std::size_t at = 0) {
        Ast a;
        a.offset = at;
        return a;
    }
    static Ast binary(Kind kind, Ast lhs, Ast rhs, std::size_t at = 0) {
        Ast a;
        a.kind = kind;
        a.offset = at;
        a.children.push_back(std::move(lhs));
        a.children.push_back(std::move(rhs));
        return a;
    }
    static Ast power(Ast base, long exponent, std::size_t at = 0) {
        Ast a;
        a.kind = Kind::Pow;
        a.exponent = exponent;
        a.offset = at;
        a.children.push_back(std::move(base));
        return a;
    }

    // Offsets are positional metadata and do not take part in equality.
    friend bool operator==(const Ast& a, const Ast& b) {
        return a.kind == b.kind && a.literal == b.literal && a.exponent == b.exponent && a.children == b.children;
    }
};

namespace detail {

class ExprParser {
   public:
    static constexpr long kMaxExponent = 1 << 16;

    explicit ExprParser(std::string_view text) : s_(text) {}

    Ast parse() {
        Ast out = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return out;
    }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Ast expr() {
        Ast lhs = term();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (eat('+'))
                lhs = Ast::binary(Ast::Kind::Add, std::move(lhs), term(), at);
            else if (eat('-'))
                lhs = Ast::binary(Ast::Kind::Sub, std::move(lhs), term(), at);
            else
                return lhs;
        }
    }

    Ast term() {
        Ast lhs = factor();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (!eat('*')) return lhs;
            lhs = Ast::binary(Ast::Kind::Mul, std::move(lhs), factor(), at);
        }
    }

    Ast factor() {
        Ast base = atom();
        skip();
        const std::size_t at = pos_;
        if (!eat('^')) return base;
        skip();
        const bool negative = eat('-');
        skip();
        const std::size_t digits = pos_;
        long value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            value = value * 10 + (s_[pos_] - '0');
            if (value > kMaxExponent) throw SyntaxError(digits, "exponent too large");
            ++pos_;
        }
        if (pos_ == digits) throw SyntaxError(pos_, "expected an integer exponent");
        return Ast::power(std::move(base), negative ? -value : value, at);
    }

    Ast atom() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const std::size_t at = pos_;
        const char c = s_[pos_];
        if (c == 'T') {
            ++pos_;
            return Ast::variable(at);
        }
        if (c == '{') {
            const auto close = s_.find('}', pos_);
            if (close == std::string_view::npos) throw SyntaxError(at, "unterminated '{'");
            std::string_view lit = s_.substr(pos_ + 1, close - pos_ - 1);
            while (!lit.empty() && std::isspace(static_cast<unsigned char>(lit.front()))) lit.remove_prefix(1);
            while (!lit.empty() && std::isspace(static_cast<unsigned char>(lit.back()))) lit.remove_suffix(1);
            if (lit.find('{') != std::string_view::npos) throw SyntaxError(at, "nested '{'");
            pos_ = close + 1;
            return Ast::constant(std::string(lit), at + 1);
        }
        if (c == '(') {
            ++pos_;
            Ast inner = expr();
            if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
            return inner;
        }
        throw SyntaxError(at, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline int precedence(const Ast& a) {
    switch (a.kind) {
        case Ast::Kind::Add:
        case Ast::Kind::Sub: return 1;
        case Ast::Kind::Mul: return 2;
        case Ast::Kind::Pow: return 3;
        default: return 4;
    }
}

inline void print_ast(const Ast& a, std::string& out) {
    auto child = [&out](const Ast& c, int need) {
        if (precedence(c) < need) {
            out += '(';
            print_ast(c, out);
            out += ')';
        } else {
            print_ast(c, out);
        }
    };
    switch (a.kind) {
        case Ast::Kind::Const: out += "{" + a.literal + "}"; return;
        case Ast::Kind::Var: out += "T"; return;
        case Ast::Kind::Add:
        case Ast::Kind::Sub:
            child(a.children[0], 1);
            out += a.kind == Ast::Kind::Add ? " + " : " - ";
            child(a.children[1], 2);
            return;
        case Ast::Kind::Mul:
            child(a.children[0], 2);
            out += "*";
            child(a.children[1], 3);
            return;
        case Ast::Kind::Pow:
            child(a.children[0], 4);
            out += "^" + std::to_string(a.exponent);
            return;
    }
}

}  // namespace detail

inline Ast parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Canonical text; parse_expr(format_expr(a)) == a.
inline std::string format_expr(const Ast& a) {
    std::string out;
    detail::print_ast(a, out);
    return out;
}

template <SkewField F>
SkewRationalFunction<F> lower(const Ast& ast, const FieldRef<F>& field) {
    using R = SkewRationalFunction<F>;
    switch (ast.kind) {
        case Ast::Kind::Const: {
            try {
                return R::polynomial(SkewPolynomial<F>::constant(field, field->parse(ast.literal)));
            } catch (const Error& e) {
                throw Error(ErrorKind::UnknownLiteral, "at offset " + std::to_string(ast.offset) + ": " + e.what());
            }
        }
        case Ast::Kind::Var: return R::polynomial(SkewPolynomial<F>::variable(field));
        case Ast::Kind::Add: return rat_add(lower(ast.children[0], field), lower(ast.children[1], field));
        case Ast::Kind::Sub: return rat_sub(lower(ast.children[0], field), lower(ast.children[1], field));
        case Ast::Kind::Mul: return rat_mul(lower(ast.children[0], field), lower(ast.children[1], field));
        case Ast::Kind::Pow: {
            R base = lower(ast.children[0], field);
            if (ast.exponent < 0) {
                if (base.is_zero())
                    throw Error(ErrorKind::ZeroInverse, "at offset " + std::to_string(ast.offset) + ": inverse of zero");
                base = rat_inv(base);
            }
            R acc = R::one(field);
            for (unsigned long n = static_cast<unsigned long>(ast.exponent < 0 ? -ast.exponent : ast.exponent); n;
                 n >>= 1) {
                if (n & 1) acc = rat_mul(acc, base);
                if (n > 1) base = rat_mul(base, base);
            }
            return acc;
        }
    }
    throw Error(ErrorKind::SyntaxError, "malformed expression tree");
}

template <SkewField F>
SkewRationalFunction<F> lower(std::string_view text, const FieldRef<F>& field) {
    return lower(parse_expr(text), field);
}

}  // namespace skewrat
