#pragma once

#include <cctype>
#include <string>

#include "polynomial.hpp"

namespace semialg {

// Recursive-descent parser for polynomial text.
//
//   poly   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := base ['^' uint]
//   base   := variable | rational | '(' poly ')'
//
// Multiplication is always explicit ('2a' is rejected), '^' takes an unsigned
// integer exponent, and rational literals look like '3' or '3/4'.
class PolyParser {
public:
    PolyParser(std::string text, VarOrderPtr ring)
        : text_(std::move(text)), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = parse_poly();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw error(errc::syntax_error, "col " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string lex_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a number");
        return text_.substr(start, pos_ - start);
    }

    std::string lex_ident() {
        skip_ws();
        std::size_t start = pos_;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos_ >= text_.size() || !head(text_[pos_])) fail("expected a variable name");
        ++pos_;
        while (pos_ < text_.size() && body(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Polynomial parse_poly() {
        Polynomial acc = parse_term();
        for (;;) {
            if (eat('+')) acc += parse_term();
            else if (eat('-')) acc -= parse_term();
            else return acc;
        }
    }

    Polynomial parse_term() {
        bool neg = eat('-');
        Polynomial acc = parse_factor();
        while (eat('*')) acc *= parse_factor();
        return neg ? -acc : acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (eat('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw error(errc::negative_exponent,
                            "col " + std::to_string(pos_ + 1) + ": exponents must be nonnegative");
            std::string digits = lex_number();
            if (digits.size() > 6)
                throw error(errc::unsupported, "exponent too large: " + digits);
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Polynomial parse_base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = parse_poly();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex_number();
            if (eat('/')) {
                std::string den = lex_number();
                return Polynomial::constant(ring_, rational_from_string(num + "/" + den));
            }
            return Polynomial::constant(ring_, rational_from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex_ident();
            return Polynomial::variable(ring_, ring_->require(name));
        }
        fail(pos_ < text_.size() ? "unexpected '" + std::string(1, c) + "'"
                                 : "unexpected end of input");
    }

    std::string text_;
    VarOrderPtr ring_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text, const VarOrderPtr& ring) {
    return PolyParser(text, ring).parse();
}

} // namespace semialg
