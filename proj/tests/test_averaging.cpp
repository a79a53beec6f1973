#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "nf/averaging.hpp"
#include "nf/poisson.hpp"
#include "testutil.hpp"

using namespace nf;

namespace {

const FrequencyData& f11() {
    static const FrequencyData freq({1, 1}, Rational(1));
    return freq;
}

Poly hopf_w(int i) {
    const int n = 2;
    Poly q1 = Poly::q(n, 0), q2 = Poly::q(n, 1), p1 = Poly::p(n, 0), p2 = Poly::p(n, 1);
    switch (i) {
        case 1: return (q1 * q2 + p1 * p2).scaled(GaussRational(2));
        case 2: return (q1 * p2 - q2 * p1).scaled(GaussRational(2));
        case 3: return q1 * q1 + p1 * p1 - q2 * q2 - p2 * p2;
        default: return q1 * q1 + q2 * q2 + p1 * p1 + p2 * p2;
    }
}

}  // namespace

TEST_CASE("frequency data validation") {
    CHECK_THROWS_AS(FrequencyData({2, 4}, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyData({1, 0}, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyData({1, 1}, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyData({1, 1}, Rational(-2)), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyData({}, Rational(1)), std::invalid_argument);
    FrequencyData ok({2, 3}, make_rational(1, 2));
    CHECK(ok.h0().degree() == 2);
}

TEST_CASE("average fixes invariants and kills the Henon-Heiles cubic") {
    Poly h0 = f11().h0();
    CHECK(average(h0, f11()) == h0);

    Poly k1 = nftest::henon_heiles().H1;
    CHECK(average(k1, f11()).is_zero());
}

TEST_CASE("average of the elastic pendulum perturbation") {
    Poly h1 = nftest::elastic_pendulum().H1;
    const int n = 2;
    Poly q1 = Poly::q(n, 0), p1 = Poly::p(n, 0);
    Poly expected = (q1 * q1 + p1 * p1).scaled(GaussRational(make_rational(-1, 4)));
    CHECK(average(h1, f11()) == expected);
}

TEST_CASE("average of q1^2") {
    const int n = 2;
    Poly q1 = Poly::q(n, 0), p1 = Poly::p(n, 0);
    Poly expected = (q1 * q1 + p1 * p1).divided(Rational(2));
    CHECK(average(q1 * q1, f11()) == expected);
}

TEST_CASE("s_op basics") {
    CHECK(s_op(f11().h0(), f11()).is_zero());

    // Pinned by the quadrature oracle: with the flow rotating z_j by
    // e^{+i m_j t}, S(q1) = p1.
    const int n = 2;
    Poly q1 = Poly::q(n, 0), p1 = Poly::p(n, 0);
    Poly s = s_op(q1, f11());
    CHECK(s.degree() == 1);
    CHECK(s == p1);

    nftest::Rng rng(1234);
    for (int rep = 0; rep < 5; ++rep) {
        auto x = rng.point(2 * n);
        double oracle = quadrature_oracle(q1, f11(), x, AveragingKind::S);
        CHECK(std::abs(oracle - s.eval_double(x)) < 1e-9);
    }
}

TEST_CASE("s_op annihilates averages") {
    nftest::Rng rng(55);
    for (const auto& modes : nftest::standard_mode_sets()) {
        FrequencyData freq(modes, Rational(2));
        for (int rep = 0; rep < 8; ++rep) {
            Poly f = rng.poly(freq.n(), 6);
            CHECK(s_op(average(f, freq), freq).is_zero());
            CHECK(average(s_op(f, freq), freq).is_zero());
        }
    }
}

TEST_CASE("lie_upsilon basics") {
    CHECK(lie_upsilon(f11().h0(), f11()).is_zero());
    for (int i = 1; i <= 4; ++i) CHECK(lie_upsilon(hopf_w(i), f11()).is_zero());
}

TEST_CASE("homological identity") {
    // lie_upsilon(s_op(f)) = f - average(f); this crosses the bracket route
    // of lie_upsilon with the phase route of s_op.
    nftest::Rng rng(90210);
    for (const auto& modes : nftest::standard_mode_sets()) {
        FrequencyData freq(modes, make_rational(5, 3));
        for (int rep = 0; rep < 10; ++rep) {
            Poly f = rng.poly(freq.n(), 8);
            CHECK(lie_upsilon(s_op(f, freq), freq) == f - average(f, freq));
        }
    }
}

TEST_CASE("averaging operator algebra") {
    nftest::Rng rng(6502);
    for (const auto& modes : nftest::standard_mode_sets()) {
        FrequencyData freq(modes, Rational(1));
        int n = freq.n();
        for (int rep = 0; rep < 8; ++rep) {
            Poly f = rng.poly(n, 6);

            // Projection.
            Poly af = average(f, freq);
            CHECK(average(af, freq) == af);
            CHECK(lie_upsilon(af, freq).is_zero());
            CHECK(average(lie_upsilon(f, freq), freq).is_zero());

            // Module property over invariants.
            Poly g = average(rng.poly(n, 3), freq);
            CHECK(average(g * f, freq) == g * af);
            CHECK(s_op(g * f, freq) == g * s_op(f, freq));

            // Bracket-averaging exchange for invariant g.
            CHECK(average(bracket(f, g), freq) == bracket(af, g));

            // Reality.
            CHECK(af.is_real());
            CHECK(s_op(f, freq).is_real());
        }
    }
}

TEST_CASE("quadrature oracle agrees with the closed forms") {
    nftest::Rng rng(31337);
    for (const auto& modes : nftest::standard_mode_sets()) {
        FrequencyData freq(modes, make_rational(7, 5));
        int n = freq.n();
        for (int rep = 0; rep < 6; ++rep) {
            Poly f = rng.poly(n, 6);
            Poly af = average(f, freq);
            Poly sf = s_op(f, freq);
            for (int pt = 0; pt < 3; ++pt) {
                auto x = rng.point(2 * n);
                CHECK(std::abs(quadrature_oracle(f, freq, x, AveragingKind::Average) -
                               af.eval_double(x)) < 1e-9);
                CHECK(std::abs(quadrature_oracle(f, freq, x, AveragingKind::S) -
                               sf.eval_double(x)) < 1e-9);
                CHECK(std::abs(quadrature_oracle(af, freq, x, AveragingKind::S)) < 1e-9);
            }
        }
    }
}

TEST_CASE("oracle on H0 returns its value") {
    FrequencyData freq({1, 2}, make_rational(3, 2));
    Poly h0 = freq.h0();
    nftest::Rng rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        auto x = rng.point(4);
        CHECK(std::abs(quadrature_oracle(h0, freq, x, AveragingKind::Average) - h0.eval_double(x)) <
              1e-10);
    }
}
