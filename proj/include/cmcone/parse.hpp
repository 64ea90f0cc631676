#ifndef CMCONE_PARSE_HPP
#define CMCONE_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "poly.hpp"

namespace cmcone {

namespace detail {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | '(' expr ')'
//   number := digits ('/' digits)?
class PolyParser {
public:
    PolyParser(std::string_view text, BivariatePoly::Variables vars) : s_(text), vars_(std::move(vars)) {}

    BivariatePoly run() {
        skip_ws();
        if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
        BivariatePoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BivariatePoly expr() {
        BivariatePoly acc = term();
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    BivariatePoly term() {
        BivariatePoly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    BivariatePoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    BivariatePoly power() {
        BivariatePoly base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError(at, "negative exponent");
        if (pos_ < s_.size() && s_[pos_] == '+') ++pos_;
        std::string digits = read_digits();
        if (digits.empty()) throw ParseError(at, "expected a nonnegative integer exponent");
        if (digits.size() > 6) throw ParseError(at, "exponent too large");
        return pow(base, static_cast<unsigned>(std::stoul(digits)));
    }

    BivariatePoly atom() {
        skip_ws();
        if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            BivariatePoly inner = expr();
            if (!accept(')')) throw ParseError(pos_ < s_.size() ? pos_ : open, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            Integer den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                const std::size_t slash = pos_;
                ++pos_;
                std::string d = read_digits();
                if (d.empty()) throw ParseError(pos_, "expected denominator after '/'");
                den = Integer(d, 10);
                if (den == 0) throw ParseError(slash, "zero denominator");
            }
            return BivariatePoly(Rational(Integer(num, 10), den), vars_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string_view id = s_.substr(start, pos_ - start);
            if (id == vars_[0]) return BivariatePoly::x(vars_);
            if (id == vars_[1]) return BivariatePoly::y(vars_);
            throw ParseError(start, "unknown identifier '" + std::string(id) + "'");
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    BivariatePoly::Variables vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and expands an arithmetic expression in the two given variables.
inline BivariatePoly parse_poly(std::string_view text, BivariatePoly::Variables vars = {"x", "y"}) {
    if (vars[0] == vars[1]) throw std::invalid_argument("variable names must differ");
    return detail::PolyParser(text, std::move(vars)).run();
}

}  // namespace cmcone

#endif
