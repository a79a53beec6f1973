#pragma once

#include <array>

#include "nf/averaging.hpp"
#include "nf/poly.hpp"

namespace nf {

// H_eps = H0 + eps H1 + (eps^2/2) H2, with H0 determined by freq.
struct PerturbedHamiltonian {
    FrequencyData freq;
    Poly H1;
    Poly H2;

    PerturbedHamiltonian(FrequencyData f, Poly h1, Poly h2);
    PerturbedHamiltonian(FrequencyData f, Poly h1);

    Poly h0() const { return freq.h0(); }
    int n() const { return freq.n(); }
};

// Polynomial coefficients of the eps-expansion H0 + eps C1 + (eps^2/2) C2.
// Truncated at order 2; O(eps^3) terms are never stored.
struct EpsSeries {
    std::array<Poly, 3> coeffs;

    bool is_zero() const { return coeffs[0].is_zero() && coeffs[1].is_zero() && coeffs[2].is_zero(); }
};

struct NormalFormResult {
    EpsSeries nf;
    Poly G0;  // generator of Z0 = X_G0
    Poly G1;  // generator of Z1 = X_G1
};

// Second-order normal form relative to the periodic flow of H0:
//   nf = H0 + eps <H1> + (eps^2/2)(<H2> + <{S(H1/omega0), H1}>),
// with transformation generators
//   G0 = S(H1)/omega0,
//   G1 = S(H2 + {S(H1/omega0), H1 + <H1>})/omega0.
NormalFormResult second_order_nf(const PerturbedHamiltonian& ph);

// Symbolic re-derivation through the Lie transform expansion
//   H o Phi = H0 + eps (L_Z0 H0 + H1)
//           + (eps^2/2)(L_Z0^2 H0 + 2 L_Z0 H1 + L_Z1 H0 + H2) + O(eps^3)
// with Lie derivatives realized as brackets with G0, G1. Returns the
// orderwise difference against res.nf; identically zero for a genuine result.
EpsSeries lie_transform_residual(const PerturbedHamiltonian& ph, const NormalFormResult& res);

// Deprit normal-form condition at orders 1 and 2: {H0, nf_i} = 0 exactly.
struct NormalFormConditionReport {
    bool order1_ok = false;
    bool order2_ok = false;
    bool ok() const { return order1_ok && order2_ok; }
};

NormalFormConditionReport normal_form_condition(const NormalFormResult& res, const FrequencyData& freq);

}  // namespace nf
