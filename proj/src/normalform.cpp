#include "nf/normalform.hpp"

#include <stdexcept>

#include "nf/poisson.hpp"

namespace nf {

PerturbedHamiltonian::PerturbedHamiltonian(FrequencyData f, Poly h1, Poly h2)
    : freq(std::move(f)), H1(std::move(h1)), H2(std::move(h2)) {
    if (H1.n() != freq.n() || H2.n() != freq.n())
        throw std::invalid_argument("perturbation dimension mismatch");
    if (!H1.is_real() || !H2.is_real())
        throw std::invalid_argument("perturbation terms must be real");
}

PerturbedHamiltonian::PerturbedHamiltonian(FrequencyData f, Poly h1)
    : PerturbedHamiltonian(std::move(f), std::move(h1), Poly::zero(h1.n())) {}

NormalFormResult second_order_nf(const PerturbedHamiltonian& ph) {
    const Rational& w0 = ph.freq.omega0();
    Poly avg_h1 = average(ph.H1, ph.freq);
    Poly g0 = s_op(ph.H1, ph.freq).divided(w0);  // = S(H1/omega0), omega0 constant
    Poly coupling = bracket(g0, ph.H1);
    Poly nf2 = average(ph.H2, ph.freq) + average(coupling, ph.freq);
    Poly g1 = s_op(ph.H2 + bracket(g0, ph.H1 + avg_h1), ph.freq).divided(w0);
    return NormalFormResult{EpsSeries{{ph.h0(), std::move(avg_h1), std::move(nf2)}},
                            std::move(g0), std::move(g1)};
}

EpsSeries lie_transform_residual(const PerturbedHamiltonian& ph, const NormalFormResult& res) {
    Poly h0 = ph.h0();
    Poly lz0_h0 = bracket(res.G0, h0);
    Poly order0 = h0 - res.nf.coeffs[0];
    Poly order1 = lz0_h0 + ph.H1 - res.nf.coeffs[1];
    Poly order2 = bracket(res.G0, lz0_h0) + bracket(res.G0, ph.H1).scaled(GaussRational(2)) +
                  bracket(res.G1, h0) + ph.H2 - res.nf.coeffs[2];
    return EpsSeries{{std::move(order0), std::move(order1), std::move(order2)}};
}

NormalFormConditionReport normal_form_condition(const NormalFormResult& res, const FrequencyData& freq) {
    Poly h0 = freq.h0();
    NormalFormConditionReport report;
    report.order1_ok = bracket(h0, res.nf.coeffs[1]).is_zero();
    report.order2_ok = bracket(h0, res.nf.coeffs[2]).is_zero();
    return report;
}

}  // namespace nf
