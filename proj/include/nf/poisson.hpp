#pragma once

#include "nf/poly.hpp"

namespace nf {

// Canonical Poisson bracket on R^2n,
//   {f,g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i,
// so {q_i, p_j} = delta_ij. The sign convention is pinned by requiring the
// flow of H0 to match the rotation used by the averaging operators; the
// quadrature oracle tests guard it.
Poly bracket(const Poly& f, const Poly& g);

// Lie derivative of g along the Hamiltonian vector field of h: X_h(g) = {h,g}.
Poly ham_apply(const Poly& h, const Poly& g);

}  // namespace nf
