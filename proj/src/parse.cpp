#include "nf/parse.hpp"

#include <cctype>

namespace nf {

namespace {

class Parser {
public:
    Parser(const std::string& text, int n) : text_(text), n_(n) {}

    Poly parse() {
        skip_ws();
        if (eof()) fail("empty expression");
        Poly f = expr();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return f;
    }

private:
    const std::string& text_;
    int n_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly f = term();
        for (;;) {
            if (accept('+'))
                f += term();
            else if (accept('-'))
                f -= term();
            else
                return f;
        }
    }

    Poly term() {
        Poly f = factor();
        for (;;) {
            if (accept('*')) {
                f = f * factor();
            } else if (accept('/')) {
                size_t at = pos_;
                Poly d = factor();
                if (d.degree() > 0) {
                    pos_ = at;
                    fail("division by a non-constant polynomial");
                }
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                f = f.scaled(GaussRational(1) / d.terms().begin()->second);
            } else {
                return f;
            }
        }
    }

    Poly factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        Poly base = primary();
        skip_ws();
        if (accept('^')) {
            long e = integer_literal("exponent expected");
            if (e < 0) fail("negative exponent");
            Poly out = Poly::constant(n_, GaussRational(1));
            for (long k = 0; k < e; ++k) out = out * base;
            return out;
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        if (eof()) fail("unexpected end of expression");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly f = expr();
            skip_ws();
            if (!accept(')')) fail("missing ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer_literal("integer expected");
            return Poly::constant(n_, GaussRational(Rational(v)));
        }
        if (c == 'q' || c == 'p') {
            size_t at = pos_;
            ++pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = at;
                fail("variable index expected");
            }
            long idx = integer_literal("variable index expected");
            if (idx < 1 || idx > n_) {
                pos_ = at;
                fail("variable " + std::string(1, c) + std::to_string(idx) + " outside dimension n=" +
                     std::to_string(n_));
            }
            int j = static_cast<int>(idx) - 1;
            return c == 'q' ? Poly::q(n_, j) : Poly::p(n_, j);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    long integer_literal(const std::string& what) {
        skip_ws();
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail(what);
        if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E'))
            fail("float literals are not accepted in exact mode");
        long v = 0;
        for (size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > 1000000000L) fail("integer literal too large");
        }
        return v;
    }
};

}  // namespace

Poly parse_polynomial(const std::string& text, int n) {
    if (n <= 0) throw std::invalid_argument("dimension must be positive");
    return Parser(text, n).parse();
}

}  // namespace nf
