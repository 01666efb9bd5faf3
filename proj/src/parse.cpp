#include "lnd/parse.hpp"

#include <algorithm>
#include <cctype>

#include "lnd/error.hpp"

namespace lnd {

namespace {

constexpr unsigned long kMaxExponent = 1u << 16;

bool ident_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}

bool ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

bool is_digit(char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
}

class Parser {
public:
    Parser(std::string_view text, const std::optional<std::vector<std::string>>& whitelist)
        : text_(text), whitelist_(whitelist) {
        if (whitelist_) vars_ = *whitelist_;
    }

    Poly parse() {
        Poly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p.with_variables(vars_);
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = signed_factor();
        while (accept('*')) acc = acc * signed_factor();
        return acc;
    }

    // Prefix signs bind looser than '^': -x^2 = -(x^2).
    Poly signed_factor() {
        if (accept('-')) return -signed_factor();
        if (accept('+')) return signed_factor();
        return factor();
    }

    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected exponent");
            while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
                pos_ = start;
                fail("exponent too large");
            }
            b = pow(b, std::stoul(digits));
        }
        return b;
    }

    Poly base() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (is_digit(ch)) return literal();
        if (ident_start(ch)) return identifier();
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    Poly literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        Integer num(std::string(text_.substr(start, pos_ - start)), 10);
        Integer den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected denominator");
            while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
            den = Integer(std::string(text_.substr(dstart, pos_ - dstart)), 10);
            if (den == 0) {
                pos_ = dstart;
                fail("zero denominator");
            }
        }
        Rational q(num, den);
        q.canonicalize();
        return Poly::constant(q, vars_);
    }

    Poly identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
            if (whitelist_) {
                pos_ = start;
                fail("unknown identifier '" + name + "'");
            }
            vars_.push_back(name);
        }
        return Poly::variable(name, vars_);
    }

    std::string_view text_;
    const std::optional<std::vector<std::string>>& whitelist_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expression(std::string_view text, const std::optional<std::vector<std::string>>& whitelist) {
    return Parser(text, whitelist).parse();
}

}  // namespace lnd
