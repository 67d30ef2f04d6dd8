#ifndef GANZ_PARSE_HPP
#define GANZ_PARSE_HPP

#include <cctype>
#include <optional>
#include <string>

#include "ganz/ratfunc.hpp"

namespace ganz {

// Recursive-descent parser for the expression grammar
//
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := "-" factor | base ("^" nat)?
//   base   := rational | "eps" | var | "(" expr ")"
//   var    := "x" nat        rational := nat ("/" nat)?
//
// Whitespace is insignificant.  "3/4" is a single rational literal (the
// rational rule is greedy), "3/x1" falls back to term-level division.
namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    RatFunc run() {
        RatFunc f = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected input", pos_);
        return f;
    }

private:
    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;

    static constexpr int kMaxExponent = 4096;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long parse_nat(const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError(std::string("expected ") + what, pos_);
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.size() > 18) throw SyntaxError("numeric literal too large", pos_);
        return std::stol(digits);
    }

    RatFunc expr() {
        RatFunc acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                acc /= factor();  // throws DivisionByZero on a zero divisor
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        if (eat('-')) return -factor();
        RatFunc b = base();
        if (eat('^')) {
            long e = parse_nat("exponent");
            if (e > kMaxExponent) throw SyntaxError("exponent too large", pos_);
            return b.pow(e);
        }
        return b;
    }

    RatFunc base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (c == 'x') {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                long idx = parse_nat("variable index");
                if (idx < 1) throw SyntaxError("variable indices start at 1", save);
                if (idx > nvars_) throw SyntaxError("variable index exceeds context", save);
                return RatFunc::variable(nvars_, static_cast<int>(idx - 1));
            }
            throw SyntaxError("expected digit after 'x'", pos_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t save = pos_;
            std::string word;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                word += s_[pos_++];
            if (word == "eps") return RatFunc::constant(nvars_, KElem::eps());
            throw SyntaxError("unknown name '" + word + "'", save);
        }
        throw SyntaxError("expected a value", pos_);
    }

    RatFunc rational_literal() {
        long n = parse_nat("number");
        std::size_t save = pos_;
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                long d = parse_nat("denominator");
                if (d == 0) throw DivisionByZero();
                return RatFunc::constant(nvars_, KElem(rat(n, d)));
            }
            pos_ = save;  // not a literal: term-level division will handle it
        } else {
            pos_ = save;
        }
        return RatFunc::constant(nvars_, KElem(Rat(n)));
    }
};

inline int scan_max_var_index(const std::string& text) {
    int mx = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            long idx = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && idx < 1000000)
                idx = idx * 10 + (text[j++] - '0');
            if (idx > mx) mx = static_cast<int>(idx);
        }
    }
    return mx;
}

} // namespace detail

// Parse with a fixed variable count (indices above it are rejected), or
// infer the count from the highest index that occurs.
inline RatFunc parse_ratfunc(const std::string& text, std::optional<int> nvars = std::nullopt) {
    int n = nvars ? *nvars : detail::scan_max_var_index(text);
    return detail::ExprParser(text, n).run();
}

// Constant expressions only: elements of K.
inline KElem parse_kelem(const std::string& text) {
    RatFunc f = parse_ratfunc(text, 0);
    KElem nv = f.num().coefficient(ExpVec{});
    KElem dv = f.den().coefficient(ExpVec{});
    return nv / dv;
}

} // namespace ganz

#endif
