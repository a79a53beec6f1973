#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nf/errors.hpp"
#include "nf/hopf.hpp"
#include "nf/parse.hpp"
#include "testutil.hpp"

using namespace nf;

namespace {

WMonomial wmono(int e1, int e2, int e3, int e4) { return WMonomial{{e1, e2, e3, e4}}; }

Rational coeff_at(const HopfPoly& h, const WMonomial& m, const std::map<int, Rational>& params) {
    auto it = h.terms.find(m);
    return it == h.terms.end() ? Rational(0) : it->second.at(params);
}

// Random invariant polynomial: a polynomial in w1..w4, expanded.
Poly random_invariant(nftest::Rng& rng, int w_degree) {
    Poly f(2);
    for (int t = 0; t < 4; ++t) {
        WMonomial m;
        int budget = rng.uniform(0, w_degree);
        for (int d = 0; d < budget; ++d) m.e[static_cast<size_t>(rng.uniform(0, 3))] += 1;
        f += expand_w_monomial(m).scaled(GaussRational(rng.rational()));
    }
    return f;
}

}  // namespace

TEST_CASE("generator definitions expand the syzygy to zero") {
    Poly s(2);
    for (const auto& [m, c] : syzygy()) s += expand_w_monomial(m).scaled(GaussRational(c));
    CHECK(s.is_zero());
}

TEST_CASE("simple rewrites") {
    Poly h0 = parse_polynomial("(q1^2 + q2^2 + p1^2 + p2^2)/2", 2);
    HopfPoly h = hopf_rewrite(h0);
    CHECK(h.num_params == 0);
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms.begin()->first == wmono(0, 0, 0, 1));
    CHECK(h.terms.begin()->second.c0 == make_rational(1, 2));

    HopfPoly deg2 = hopf_rewrite(parse_polynomial("(q1^2 + p1^2)/16", 2));
    CHECK(deg2.num_params == 0);
    CHECK(coeff_at(deg2, wmono(0, 0, 1, 0), {}) == make_rational(1, 32));
    CHECK(coeff_at(deg2, wmono(0, 0, 0, 1), {}) == make_rational(1, 32));
}

TEST_CASE("Henon-Heiles quartic family") {
    PerturbedHamiltonian ph = nftest::henon_heiles();
    NormalFormResult res = second_order_nf(ph);
    HopfPoly fam = hopf_rewrite(res.nf.coeffs[2].divided(Rational(2)));

    // One parameter tracing the syzygy: coefficient of eps^2 is
    // w2^2 (48 lambda + 7)/48 - w4^2 (48 lambda + 5)/48 + lambda w3^2 + lambda w1^2.
    REQUIRE(fam.num_params == 1);
    std::map<int, Rational> zero{{0, Rational(0)}}, one{{0, Rational(1)}};

    CHECK(coeff_at(fam, wmono(0, 2, 0, 0), zero) == make_rational(7, 48));
    CHECK(coeff_at(fam, wmono(0, 0, 0, 2), zero) == make_rational(-5, 48));
    CHECK(coeff_at(fam, wmono(2, 0, 0, 0), zero) == 0);
    CHECK(coeff_at(fam, wmono(0, 0, 2, 0), zero) == 0);

    CHECK(coeff_at(fam, wmono(0, 2, 0, 0), one) == make_rational(55, 48));
    CHECK(coeff_at(fam, wmono(0, 0, 0, 2), one) == make_rational(-53, 48));
    CHECK(coeff_at(fam, wmono(2, 0, 0, 0), one) == 1);
    CHECK(coeff_at(fam, wmono(0, 0, 2, 0), one) == 1);

    // All family members back-substitute to the same polynomial.
    Poly expected = res.nf.coeffs[2].divided(Rational(2));
    CHECK(hopf_substitute(fam, zero) == expected);
    CHECK(hopf_substitute(fam, one) == expected);
    CHECK(hopf_substitute(fam, {{0, make_rational(-3, 7)}}) == expected);
}

TEST_CASE("family difference is a multiple of the syzygy") {
    PerturbedHamiltonian ph = nftest::henon_heiles();
    NormalFormResult res = second_order_nf(ph);
    HopfPoly fam = hopf_rewrite(res.nf.coeffs[2].divided(Rational(2)));
    REQUIRE(fam.num_params == 1);

    Rational t = make_rational(5, 3);
    std::map<WMonomial, Rational> diff;
    for (const auto& [m, c] : fam.terms) {
        Rational d = c.at({{0, t}}) - c.at({{0, Rational(0)}});
        if (d != 0) diff.emplace(m, d);
    }
    std::map<WMonomial, Rational> expected;
    for (const auto& [m, c] : syzygy()) expected.emplace(m, c * t);
    CHECK(diff == expected);
}

TEST_CASE("full Hopf report for Henon-Heiles") {
    PerturbedHamiltonian ph = nftest::henon_heiles();
    NormalFormResult res = second_order_nf(ph);
    HopfReport report = nf_to_hopf(res, ph.freq);

    CHECK(HopfPoly::terms_to_string(report.orders[0].representative()) == "1/2*w4");
    CHECK(report.orders[1].terms.empty());
    CHECK(HopfPoly::terms_to_string(report.orders[2].representative()) ==
          "7/48*w2^2 - 5/48*w4^2");
}

TEST_CASE("full Hopf report for the elastic pendulum") {
    PerturbedHamiltonian ph = nftest::elastic_pendulum();
    NormalFormResult res = second_order_nf(ph);
    HopfReport report = nf_to_hopf(res, ph.freq);

    CHECK(HopfPoly::terms_to_string(report.orders[0].representative()) == "1/2*w4");
    CHECK(HopfPoly::terms_to_string(report.orders[1].representative()) == "-1/8*w3 - 1/8*w4");

    // The eps^2 coefficient: the quartic part matches the published
    // mu = 0 rewriting; the degree-2 part is -(w3 + w4)/32, consistent with
    // the (q,p)-variables normal form (whose degree-2 part is
    // -(q1^2 + p1^2)/16, i.e. negative).
    const HopfPoly& a2 = report.orders[2];
    std::map<int, Rational> mu0{{0, Rational(0)}};
    CHECK(coeff_at(a2, wmono(0, 0, 0, 2), mu0) == make_rational(-25, 768));
    CHECK(coeff_at(a2, wmono(0, 0, 1, 1), mu0) == make_rational(-5, 384));
    CHECK(coeff_at(a2, wmono(0, 0, 2, 0), mu0) == make_rational(5, 256));
    CHECK(coeff_at(a2, wmono(0, 2, 0, 0), mu0) == make_rational(1, 32));
    CHECK(coeff_at(a2, wmono(2, 0, 0, 0), mu0) == 0);
    CHECK(coeff_at(a2, wmono(0, 0, 1, 0), mu0) == make_rational(-1, 32));
    CHECK(coeff_at(a2, wmono(0, 0, 0, 1), mu0) == make_rational(-1, 32));

    // Published family structure: the parameter traces the syzygy.
    REQUIRE(a2.num_params == 1);
    std::map<int, Rational> mu1{{0, Rational(1)}};
    CHECK(coeff_at(a2, wmono(0, 0, 0, 2), mu1) == make_rational(-25, 768) - 1);
    CHECK(coeff_at(a2, wmono(0, 2, 0, 0), mu1) == make_rational(1, 32) + 1);
    CHECK(coeff_at(a2, wmono(2, 0, 0, 0), mu1) == 1);

    Poly back = hopf_substitute(a2, mu0);
    CHECK(back == res.nf.coeffs[2].divided(Rational(2)));
}

TEST_CASE("round trip on random invariants") {
    nftest::Rng rng(424242);
    for (int rep = 0; rep < 12; ++rep) {
        Poly f = random_invariant(rng, 4);  // degree <= 8 in (q,p)
        HopfPoly h = hopf_rewrite(f);
        std::map<int, Rational> zero, other;
        for (int k = 0; k < h.num_params; ++k) {
            zero[k] = 0;
            other[k] = rng.rational();
        }
        CHECK(hopf_substitute(h, zero) == f);
        CHECK(hopf_substitute(h, other) == f);
    }
}

TEST_CASE("non-invariant inputs are rejected with a witness") {
    nftest::Rng rng(321);
    FrequencyData freq({1, 1}, Rational(1));
    int rejected = 0;
    for (int rep = 0; rep < 12; ++rep) {
        Poly f = rng.poly(2, 5);
        if (lie_upsilon(f, freq).is_zero()) continue;  // rare
        ++rejected;
        CHECK_THROWS_WITH_AS(hopf_rewrite(f), doctest::Contains("lie_upsilon witness"),
                             PreconditionError);
    }
    CHECK(rejected >= 8);

    CHECK_THROWS_AS(hopf_rewrite(Poly::q(2, 0)), PreconditionError);
    CHECK_THROWS_AS(hopf_rewrite(Poly::q(1, 0)), PreconditionError);
}

TEST_CASE("odd homogeneous components are unrepresentable") {
    CHECK_THROWS_WITH_AS(detail::rewrite_homogeneous(Poly::q(2, 0), 1, 0),
                         doctest::Contains("odd-degree"), PreconditionError);
}

TEST_CASE("substitution requires a full parameter assignment") {
    PerturbedHamiltonian ph = nftest::henon_heiles();
    NormalFormResult res = second_order_nf(ph);
    HopfPoly fam = hopf_rewrite(res.nf.coeffs[2].divided(Rational(2)));
    CHECK_THROWS_AS(hopf_substitute(fam, {}), PreconditionError);
}

TEST_CASE("family text uses deterministic parameter names") {
    PerturbedHamiltonian ph = nftest::henon_heiles();
    NormalFormResult res = second_order_nf(ph);
    HopfPoly fam = hopf_rewrite(res.nf.coeffs[2].divided(Rational(2)));
    std::string text = fam.to_string();
    CHECK(text.find("lambda0") != std::string::npos);
    CHECK(text.find("w1^2") != std::string::npos);
}
