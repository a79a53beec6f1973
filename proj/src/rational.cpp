#include "nf/rational.hpp"

#include <cctype>

namespace nf {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto fail = [&] { throw std::invalid_argument("bad rational literal: '" + s + "'"); };
    size_t i = 0;
    auto read_int = [&]() -> Integer {
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail();
        Integer v(s.substr(start, i - start));
        return neg ? Integer(-v) : v;
    };
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    Integer num = read_int();
    Integer den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0) fail();
    }
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) fail();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string to_string(const GaussRational& c) {
    if (c.im == 0) return to_string(c.re);
    std::string im = to_string(c.im);
    if (c.re == 0) {
        if (im == "1") return "i";
        if (im == "-1") return "-i";
        return im + "*i";
    }
    std::string out = "(" + to_string(c.re);
    if (c.im > 0)
        out += " + " + (im == "1" ? std::string("i") : im + "*i");
    else
        out += " - " + (to_string(-c.im) == "1" ? std::string("i") : to_string(-c.im) + "*i");
    return out + ")";
}

}  // namespace nf
