#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace nf {

// Exact scalar type for all polynomial coefficients. Kept in canonical form
// (gcd(num, den) = 1, den > 0, zero is 0/1) by the backend.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(Integer(num), Integer(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r);

// Parses "a" or "a/b" with optional leading sign. Throws std::invalid_argument
// on anything else (floats are deliberately rejected).
Rational rational_from_string(const std::string& s);

// Gaussian rational a + b*i. Closed under +,-,*,/ (division by nonzero).
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }

    GaussRational operator-() const { return {-re, -im}; }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }

    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::invalid_argument("division by zero GaussRational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

// i as a constant.
inline GaussRational gauss_i() { return {Rational(0), Rational(1)}; }

std::string to_string(const GaussRational& c);

}  // namespace nf
