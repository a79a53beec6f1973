#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nf/dynamics.hpp"
#include "nf/poisson.hpp"
#include "testutil.hpp"

using namespace nf;

TEST_CASE("canonical relations") {
    const int n = 2;
    Poly q1 = Poly::q(n, 0), p1 = Poly::p(n, 0), p2 = Poly::p(n, 1);
    CHECK(bracket(q1, p1) == Poly::constant(n, GaussRational(1)));
    CHECK(bracket(q1, p2).is_zero());
    CHECK(bracket(q1 * q1, p1) == q1.scaled(GaussRational(2)));

    Poly h0 = FrequencyData({1, 1}, Rational(1)).h0();
    CHECK(bracket(h0, h0).is_zero());
    CHECK(ham_apply(h0, h0).is_zero());
}

TEST_CASE("rotation invariant commutes with H0") {
    const int n = 2;
    Poly h0 = FrequencyData({1, 1}, Rational(1)).h0();
    Poly q1 = Poly::q(n, 0), p1 = Poly::p(n, 0);
    CHECK(ham_apply(h0, q1 * q1 + p1 * p1).is_zero());
}

TEST_CASE("bracket antisymmetry, Jacobi, Leibniz") {
    nftest::Rng rng(314159);
    for (int rep = 0; rep < 20; ++rep) {
        int n = rng.uniform(1, 2);
        Poly f = rng.poly(n, 4), g = rng.poly(n, 4), h = rng.poly(n, 3);
        CHECK((bracket(f, g) + bracket(g, f)).is_zero());
        Poly jacobi = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
        CHECK(jacobi.is_zero());
        CHECK(bracket(f, g * h) == bracket(f, g) * h + g * bracket(f, h));
    }
}

TEST_CASE("S1-invariant functions Poisson-commute with H0") {
    nftest::Rng rng(777);
    for (const auto& modes : nftest::standard_mode_sets()) {
        FrequencyData freq(modes, make_rational(3, 2));
        int n = freq.n();
        for (int rep = 0; rep < 10; ++rep) {
            Poly g = average(rng.poly(n, 5), freq);
            REQUIRE(lie_upsilon(g, freq).is_zero());
            CHECK(bracket(freq.h0(), g).is_zero());
        }
    }
}

TEST_CASE("flow derivative oracle fixes the bracket sign") {
    // d/dt q1 along the numerically integrated flow of X_H0 at t=0 must match
    // bracket(H0, q1) = -p1.
    const int n = 2;
    FrequencyData freq({1, 1}, Rational(1));
    Poly h0 = freq.h0();
    Poly q1 = Poly::q(n, 0), p1 = Poly::p(n, 0);
    CHECK(bracket(h0, q1) == -p1);

    nftest::Rng rng(4242);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> x = rng.point(2 * n);
        const double h = 1e-3;
        IntegratorConfig cfg;
        cfg.step = h;
        cfg.steps = 1;
        Trajectory fwd = integrate(h0, x, cfg);
        cfg.step = -h;
        Trajectory bwd = integrate(h0, x, cfg);
        double deriv = (fwd.states[1][0] - bwd.states[1][0]) / (2 * h);
        double expected = bracket(h0, q1).eval_double(x);
        CHECK(deriv == doctest::Approx(expected).epsilon(1e-6));
    }
}
