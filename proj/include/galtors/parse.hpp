#pragma once

// Infix polynomial and rational-function literals in up to two variables.
//
//   equation := expr [ '=' expr ]
//   expr     := ['+'|'-'] term { ('+'|'-') term }
//   term     := power { ['*'|'/'] power }      juxtaposition multiplies
//   power    := atom [ '^' ['-'] integer ]
//   atom     := integer | variable | '(' expr ')' | '-' atom
//
// "lhs = rhs" becomes lhs - rhs with denominators cleared.

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

#include "poly.hpp"

namespace galtors {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at column " + std::to_string(pos + 1)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// num / den with den != 0.
struct RationalFunction {
    BiPoly num{0}, den{1};
};

namespace detail {

class InfixParser {
public:
    InfixParser(std::string text, std::string first, std::string second)
        : s_(std::move(text)), first_(std::move(first)), second_(std::move(second)) {}

    RationalFunction equation() {
        RationalFunction lhs = expr();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '=') {
            ++pos_;
            RationalFunction rhs = expr();
            lhs = {lhs.num * rhs.den - rhs.num * lhs.den, lhs.den * rhs.den};
        }
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return lhs;
    }

private:
    static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool minus) {
        BiPoly rhs = b.num * a.den;
        if (a.den == b.den) return {minus ? a.num - b.num : a.num + b.num, a.den};
        return {minus ? a.num * b.den - rhs : a.num * b.den + rhs, a.den * b.den};
    }
    static RationalFunction mul(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    RationalFunction divide(const RationalFunction& a, const RationalFunction& b, std::size_t at) const {
        if (b.num.is_zero()) throw ParseError("division by zero", at);
        return {a.num * b.den, a.den * b.num};
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        const unsigned char c = static_cast<unsigned char>(s_[pos_]);
        return std::isdigit(c) || std::isalpha(c) || c == '_' || c == '(';
    }

    RationalFunction expr() {
        RationalFunction acc;
        bool minus = false;
        if (peek('+') || peek('-')) minus = s_[pos_++] == '-';
        acc = term();
        if (minus) acc.num = -acc.num;
        while (peek('+') || peek('-')) {
            const bool m = s_[pos_++] == '-';
            acc = add(acc, term(), m);
        }
        return acc;
    }

    RationalFunction term() {
        RationalFunction acc = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = mul(acc, power());
            } else if (peek('/')) {
                const std::size_t at = pos_++;
                acc = divide(acc, power(), at);
            } else if (starts_atom()) {
                acc = mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (!peek('^')) return base;
        ++pos_;
        bool negative = false;
        if (peek('-')) {
            negative = true;
            ++pos_;
        }
        skip();
        const std::size_t at = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty()) throw ParseError("expected an integer exponent", at);
        if (digits.size() > 4) throw ParseError("exponent too large", at);
        const unsigned e = static_cast<unsigned>(std::stoul(digits));
        RationalFunction out{pow(base.num, e), pow(base.den, e)};
        if (negative) {
            if (out.num.is_zero()) throw ParseError("zero to a negative power", at);
            std::swap(out.num, out.den);
        }
        return out;
    }

    RationalFunction atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const std::size_t at = pos_;
        const unsigned char c = static_cast<unsigned char>(s_[pos_]);
        if (c == '-') {
            ++pos_;
            RationalFunction r = atom();
            r.num = -r.num;
            return r;
        }
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (std::isdigit(c)) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
            return {BiPoly(BigRat(BigInt(digits))), BiPoly(1)};
        }
        if (std::isalpha(c) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            if (name == first_) return {BiPoly::var(Var::First), BiPoly(1)};
            if (name == second_) return {BiPoly::var(Var::Second), BiPoly(1)};
            throw ParseError("unknown variable '" + name + "' (expected " + first_ + " or " + second_ + ")", at);
        }
        throw ParseError(std::string("unexpected '") + s_[pos_] + "'", at);
    }

    std::string s_, first_, second_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression or equation; both sides may be rational functions.
inline RationalFunction parse_rational_function(const std::string& text, const std::string& first = "s",
                                                const std::string& second = "t") {
    return detail::InfixParser(text, first, second).equation();
}

/// Parses a polynomial. An equation is moved to one side and its
/// denominators cleared; a bare expression must have constant denominator.
inline BiPoly parse_polynomial(const std::string& text, const std::string& first = "s",
                               const std::string& second = "t") {
    const RationalFunction r = parse_rational_function(text, first, second);
    const bool is_equation = text.find('=') != std::string::npos;
    if (!is_equation) {
        if (r.den.degree_in(Var::First) > 0 || r.den.degree_in(Var::Second) > 0)
            throw std::invalid_argument("not a polynomial: '" + text + "'");
        return r.num * BiPoly(1 / r.den.coeff(0, 0));
    }
    return r.num;
}

/// Univariate version in the first variable.
inline UniPoly parse_univariate(const std::string& text, const std::string& var = "x") {
    const BiPoly p = parse_polynomial(text, var, "\x01");
    return p.specialize(Var::Second, 0);
}

}  // namespace galtors
