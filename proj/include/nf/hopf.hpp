#pragma once

#include <array>
#include <map>
#include <string>

#include "nf/normalform.hpp"
#include "nf/poly.hpp"

namespace nf {

// Monomial in the Hopf invariants w1..w4, graded-lex ordered with
// w1 < w2 < w3 < w4.
struct WMonomial {
    std::array<int, 4> e{0, 0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    bool operator==(const WMonomial& o) const { return e == o.e; }
    bool operator<(const WMonomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return e < o.e;
    }
};

// Coefficient c0 + sum_k c_k * lambda_k, affine in the free parameters of a
// rewriting family.
struct AffineCoeff {
    Rational c0;
    std::map<int, Rational> linear;  // parameter index -> coefficient

    bool is_zero() const { return c0 == 0 && linear.empty(); }
    Rational at(const std::map<int, Rational>& params) const;
};

// Affine family of rewritings of one S^1-invariant polynomial in the Hopf
// variables. Every parameter value back-substitutes to the same Poly; the
// parameters trace the syzygy ambiguity.
struct HopfPoly {
    std::map<WMonomial, AffineCoeff> terms;
    int num_params = 0;

    // Family member with every parameter set to zero.
    std::map<WMonomial, Rational> representative() const;
    std::string to_string() const;
    static std::string terms_to_string(const std::map<WMonomial, Rational>& terms);
};

// Definitions of w1..w4 as quadratics on R^4 (n = 2):
//   w1 = 2(q1 q2 + p1 p2), w2 = 2(q1 p2 - q2 p1),
//   w3 = q1^2 + p1^2 - q2^2 - p2^2, w4 = q1^2 + q2^2 + p1^2 + p2^2.
const std::array<Poly, 4>& hopf_generators();

// The single relation among the generators: w1^2 + w2^2 + w3^2 - w4^2,
// which expands to zero in (q, p).
const std::map<WMonomial, Rational>& syzygy();

// Expands a w-monomial to its (q, p) polynomial.
Poly expand_w_monomial(const WMonomial& m);

// Rewrites an S^1-invariant real polynomial (n = 2, modes (1,1)) as a family
// of polynomials in w1..w4. Per homogeneous degree 2d of f, matches
// coefficients of all w-monomials of degree d by an exact linear solve.
// Columns are processed in the fixed graded-lex order (w4-heavy first), so
// free columns fall on the w1-richest monomials; they become parameters
// lambda0, lambda1, ... in processing order, and the zero-parameter member is
// the representative. Throws PreconditionError for non-invariant input,
// reporting the nonzero lie_upsilon witness.
HopfPoly hopf_rewrite(const Poly& f);

// Exact back-substitution of a family member into (q, p). Requires a value
// for every parameter.
Poly hopf_substitute(const HopfPoly& h, const std::map<int, Rational>& params);

// Per-order Hopf forms of a normal form on n = 2, modes (1,1): orders[k] is
// the rewriting of the eps^k series coefficient of H o Phi, i.e. of
// nf.coeffs[k]/k!.
struct HopfReport {
    std::array<HopfPoly, 3> orders;
};

HopfReport nf_to_hopf(const NormalFormResult& res, const FrequencyData& freq);

namespace detail {
// Single-degree rewrite helper: f must be homogeneous of even degree.
// param_base is the index of the first new free parameter.
HopfPoly rewrite_homogeneous(const Poly& f, int degree, int param_base);
}  // namespace detail

}  // namespace nf
