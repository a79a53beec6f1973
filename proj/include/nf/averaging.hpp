#pragma once

#include <span>
#include <vector>

#include "nf/poly.hpp"

namespace nf {

// Resonant oscillator data: H0 = omega0 * sum_j m_j (q_j^2 + p_j^2)/2 with
// positive integer modes of gcd 1. The flow of X_H0 is periodic with constant
// frequency omega0, and the S^1-action generator is Upsilon = X_H0 / omega0,
// under whose flow z_j = q_j + i p_j picks up the phase e^{i m_j t}.
class FrequencyData {
public:
    FrequencyData(std::vector<int> modes, Rational omega0);

    int n() const { return static_cast<int>(modes_.size()); }
    const std::vector<int>& modes() const { return modes_; }
    const Rational& omega0() const { return omega0_; }

    Poly h0() const;

private:
    std::vector<int> modes_;
    Rational omega0_;
};

// Direction of the phase picked up by z_j under the action: z_j |-> e^{i sigma m_j t} z_j.
// Pinned by the quadrature oracle (acceptance criterion on oracle agreement);
// flipping it flips the sign of s_op.
inline constexpr int kActionDirection = +1;

// Net phase weight k = sigma * sum_j m_j (a_j - b_j) of a complex-basis term
// z^a zbar^b; the term is S^1-invariant iff k = 0.
int phase_weight(const Monomial& ab, const FrequencyData& freq);

// Time average over one period of the S^1-action: keeps exactly the phase
// weight zero part of f. A projection onto invariants; real for real f.
Poly average(const Poly& f, const FrequencyData& freq);

// The S operator, (1/2pi) int_0^{2pi} (t - pi) (Fl^t_Upsilon)^* f dt. In the
// complex basis a phase-k term is scaled by the exact factor -i/k (k != 0)
// and killed for k = 0. Satisfies lie_upsilon(s_op(f)) = f - average(f).
Poly s_op(const Poly& f, const FrequencyData& freq);

// Lie derivative along the action generator, realized as bracket(H0, f)/omega0.
Poly lie_upsilon(const Poly& f, const FrequencyData& freq);

enum class AveragingKind { Average, S };

// Independent numerical oracle for the averaging integrals: composite
// Gauss-Legendre quadrature of f(Fl^t_Upsilon(x)) (or (t - pi) times it) over
// [0, 2pi], divided by 2pi, with the flow applied as the exact per-mode
// rotation by angle m_j t. Absolute error below 1e-10 for degree <= 8.
double quadrature_oracle(const Poly& f, const FrequencyData& freq,
                         std::span<const double> point, AveragingKind which);

// The per-mode rotation x |-> Fl^t_Upsilon(x) used by the oracle.
std::vector<double> action_flow(const FrequencyData& freq, std::span<const double> point, double t);

}  // namespace nf
