#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nf/rational.hpp"

namespace nf {

// Exponent vector over the 2n canonical variables, stored as
// (q_1..q_n, p_1..p_n). Ordered graded-lexicographically with variable
// precedence q1 < p1 < q2 < p2 < ... so iteration order is canonical.
class Monomial {
public:
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars);  // all exponents zero

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int exp(int var) const { return exps_[static_cast<size_t>(var)]; }
    const std::vector<int>& exps() const { return exps_; }

    Monomial times(const Monomial& o) const;           // exponent sum
    Monomial lowered(int var) const;                   // exponent at var minus one

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const;

private:
    std::vector<int> exps_;
};

// Multivariate polynomial over (q_1..q_n, p_1..p_n) with exact Gaussian
// rational coefficients. Zero coefficients are never stored, so equality of
// term maps is equality of polynomials. Immutable in spirit: all operations
// return new values.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussRational>;

    explicit Poly(int n);
    static Poly zero(int n) { return Poly(n); }
    static Poly constant(int n, GaussRational c);
    static Poly variable(int n, int var);              // var in [0, 2n)
    static Poly q(int n, int j) { return variable(n, j); }          // j in [0, n)
    static Poly p(int n, int j) { return variable(n, n + j); }      // j in [0, n)

    int n() const { return n_; }
    int nvars() const { return 2 * n_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    int degree() const;  // -1 for the zero polynomial

    void add_term(const Monomial& m, const GaussRational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const GaussRational& c) const;
    Poly divided(const Rational& c) const;

    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Formal partial derivative with respect to variable index var in [0, 2n).
    Poly partial(int var) const;

    // Homogeneous component of the given total degree.
    Poly homogeneous_part(int deg) const;
    std::vector<int> degrees_present() const;

    // Exact evaluation at a rational point (length 2n).
    GaussRational eval_exact(std::span<const Rational> point) const;
    // Real-mode exact evaluation; throws if the polynomial is not real.
    Rational eval_rational(std::span<const Rational> point) const;
    // Floating evaluation; exact coefficients are converted to double last.
    // Throws if the polynomial is not real.
    double eval_double(std::span<const double> point) const;

    std::string to_string() const;  // variables named q1..qn, p1..pn

private:
    int n_;
    TermMap terms_;

    void check_same_space(const Poly& o) const;
};

// Polynomial in the complex phase variables z_j = q_j + i p_j and their
// conjugates, Sum c_ab z^a zbar^b. Exponents stored as (a_1..a_n, b_1..b_n).
// The change of basis diagonalizes the oscillator flow, so averaging
// operators act term by term.
class ComplexBasisPoly {
public:
    using TermMap = std::map<Monomial, GaussRational>;

    ComplexBasisPoly(int n, TermMap terms) : n_(n), terms_(std::move(terms)) {}

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }

    std::string to_string() const;  // variables named z1.., zb1..

private:
    int n_;
    TermMap terms_;
};

ComplexBasisPoly to_complex_basis(const Poly& f);
Poly from_complex_basis(const ComplexBasisPoly& F);

namespace detail {
// Substitutes images[v] for variable v in f and expands. All images must live
// in one common target space.
Poly substitute_linear(const Poly& f, const std::vector<Poly>& images);
}  // namespace detail

}  // namespace nf
