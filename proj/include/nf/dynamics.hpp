#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nf/normalform.hpp"
#include "nf/poly.hpp"

namespace nf {

// Fixed-step implicit midpoint scheme: second order, symmetric, and
// symplectic for arbitrary polynomial Hamiltonians. The implicit stage is
// resolved by fixed-point iteration to fp_tol in the max norm.
struct IntegratorConfig {
    double step = 1e-2;
    long steps = 0;
    double fp_tol = 1e-14;
    int max_fp_iter = 200;
};

struct IntegratorError : std::runtime_error {
    long step_index;
    IntegratorError(const std::string& msg, long idx) : std::runtime_error(msg), step_index(idx) {}
};

// Double-precision canonical vector field of a real polynomial Hamiltonian,
// qdot_j = -dH/dp_j, pdot_j = +dH/dq_j (the flow of X_H under the library's
// bracket convention).
class CompiledHamiltonian {
public:
    explicit CompiledHamiltonian(const Poly& h);
    // Weighted sum sum_k scale_k * part_k, for eps-truncated Hamiltonians.
    CompiledHamiltonian(std::initializer_list<std::pair<const Poly*, double>> parts);

    int n() const { return n_; }
    double energy(std::span<const double> x) const;
    void rhs(std::span<const double> x, std::span<double> out) const;

private:
    struct CTerm {
        double c;
        std::vector<int> exps;
    };
    static std::vector<CTerm> compile(const Poly& f);
    static double eval(const std::vector<CTerm>& terms, std::span<const double> x);

    int n_;
    std::vector<CTerm> energy_;
    std::vector<std::vector<CTerm>> grad_;  // 2n partial derivatives of H
};

struct Trajectory {
    double step = 0.0;
    std::vector<std::vector<double>> states;  // steps + 1 rows of length 2n
};

// One implicit midpoint step in place; throws IntegratorError on fixed-point
// non-convergence.
void midpoint_step(const CompiledHamiltonian& h, std::vector<double>& x, double step,
                   const IntegratorConfig& cfg, long step_index);

Trajectory integrate(const Poly& hamiltonian, std::span<const double> x0, const IntegratorConfig& cfg);
Trajectory integrate(const CompiledHamiltonian& h, std::span<const double> x0, const IntegratorConfig& cfg);

// Hopf invariants w1..w4 of a phase-space point (n = 2).
std::array<double, 4> hopf_values(std::span<const double> x);

// Long-time comparison of the true flow of H_eps against the truncated
// normal form flow, both started at x0 and integrated over t in [0, T/eps].
// Errors are measured in the invariants w1..w4 (sup over time of the max
// deviation), which absorb the O(eps) near-identity coordinate wobble that
// the untransformed comparison would otherwise see.
struct ComparisonReport {
    std::vector<double> eps;
    std::vector<double> errors;              // second-order truncation
    std::vector<double> errors_first_order;  // order-1 truncation, same protocol
    double slope = 0.0;                      // least-squares log-log fit of errors vs eps
    double slope_residual = 0.0;             // rms residual of the fit
    double horizon_T = 0.0;
    double step = 0.0;
};

ComparisonReport compare_nf(const PerturbedHamiltonian& ph, const NormalFormResult& res,
                            std::span<const double> eps_values, std::span<const double> x0,
                            double horizon_T, const IntegratorConfig& cfg);

}  // namespace nf
