#include "nf/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "nf/errors.hpp"

namespace nf {

std::vector<CompiledHamiltonian::CTerm> CompiledHamiltonian::compile(const Poly& f) {
    std::vector<CTerm> out;
    out.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) out.push_back({to_double(c.re), m.exps()});
    return out;
}

double CompiledHamiltonian::eval(const std::vector<CTerm>& terms, std::span<const double> x) {
    double acc = 0.0;
    for (const auto& t : terms) {
        double v = t.c;
        for (size_t var = 0; var < t.exps.size(); ++var)
            for (int k = 0; k < t.exps[var]; ++k) v *= x[var];
        acc += v;
    }
    return acc;
}

CompiledHamiltonian::CompiledHamiltonian(const Poly& h) : CompiledHamiltonian({{&h, 1.0}}) {}

CompiledHamiltonian::CompiledHamiltonian(std::initializer_list<std::pair<const Poly*, double>> parts)
    : n_(parts.begin()->first->n()) {
    grad_.resize(static_cast<size_t>(2 * n_));
    for (const auto& [poly, scale] : parts) {
        if (poly->n() != n_) throw std::invalid_argument("part dimension mismatch");
        if (!poly->is_real()) throw std::invalid_argument("Hamiltonian must be real");
        if (scale == 0.0 || poly->is_zero()) continue;
        for (const auto& t : compile(*poly)) energy_.push_back({t.c * scale, t.exps});
        for (int var = 0; var < 2 * n_; ++var)
            for (const auto& t : compile(poly->partial(var)))
                grad_[static_cast<size_t>(var)].push_back({t.c * scale, t.exps});
    }
}

double CompiledHamiltonian::energy(std::span<const double> x) const { return eval(energy_, x); }

void CompiledHamiltonian::rhs(std::span<const double> x, std::span<double> out) const {
    for (int j = 0; j < n_; ++j) {
        out[static_cast<size_t>(j)] = -eval(grad_[static_cast<size_t>(n_ + j)], x);
        out[static_cast<size_t>(n_ + j)] = eval(grad_[static_cast<size_t>(j)], x);
    }
}

void midpoint_step(const CompiledHamiltonian& h, std::vector<double>& x, double step,
                   const IntegratorConfig& cfg, long step_index) {
    const size_t dim = x.size();
    std::vector<double> mid(x), f(dim), next(dim);
    bool converged = false;
    for (int it = 0; it < cfg.max_fp_iter; ++it) {
        h.rhs(mid, f);
        double delta = 0.0;
        for (size_t i = 0; i < dim; ++i) {
            next[i] = x[i] + 0.5 * step * f[i];
            delta = std::max(delta, std::abs(next[i] - mid[i]));
        }
        mid.swap(next);
        if (delta < cfg.fp_tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw IntegratorError("implicit midpoint fixed point did not converge at step " +
                                  std::to_string(step_index),
                              step_index);
    for (size_t i = 0; i < dim; ++i) x[i] = 2.0 * mid[i] - x[i];
}

Trajectory integrate(const CompiledHamiltonian& h, std::span<const double> x0, const IntegratorConfig& cfg) {
    if (x0.size() != static_cast<size_t>(2 * h.n()))
        throw std::invalid_argument("initial point has wrong length");
    if (cfg.step <= 0 || cfg.steps <= 0) throw std::invalid_argument("step and steps must be positive");
    for (double v : x0)
        if (!std::isfinite(v)) throw std::invalid_argument("initial point must be finite");

    Trajectory traj;
    traj.step = cfg.step;
    traj.states.reserve(static_cast<size_t>(cfg.steps) + 1);
    std::vector<double> x(x0.begin(), x0.end());
    traj.states.push_back(x);
    for (long k = 0; k < cfg.steps; ++k) {
        midpoint_step(h, x, cfg.step, cfg, k);
        traj.states.push_back(x);
    }
    return traj;
}

Trajectory integrate(const Poly& hamiltonian, std::span<const double> x0, const IntegratorConfig& cfg) {
    return integrate(CompiledHamiltonian(hamiltonian), x0, cfg);
}

std::array<double, 4> hopf_values(std::span<const double> x) {
    if (x.size() != 4) throw std::invalid_argument("Hopf invariants need a 4-dimensional point");
    double q1 = x[0], q2 = x[1], p1 = x[2], p2 = x[3];
    return {2.0 * (q1 * q2 + p1 * p2), 2.0 * (q1 * p2 - q2 * p1),
            q1 * q1 + p1 * p1 - q2 * q2 - p2 * p2, q1 * q1 + q2 * q2 + p1 * p1 + p2 * p2};
}

namespace {

// Sup over the trajectory of the max-norm deviation of the invariants
// between two flows advanced in lockstep.
double invariant_sup_error(const CompiledHamiltonian& ha, const CompiledHamiltonian& hb,
                           std::span<const double> x0, long steps, const IntegratorConfig& cfg) {
    std::vector<double> xa(x0.begin(), x0.end()), xb(x0.begin(), x0.end());
    double sup = 0.0;
    for (long k = 0; k < steps; ++k) {
        midpoint_step(ha, xa, cfg.step, cfg, k);
        midpoint_step(hb, xb, cfg.step, cfg, k);
        auto wa = hopf_values(xa), wb = hopf_values(xb);
        for (int i = 0; i < 4; ++i) sup = std::max(sup, std::abs(wa[static_cast<size_t>(i)] - wb[static_cast<size_t>(i)]));
    }
    return sup;
}

}  // namespace

ComparisonReport compare_nf(const PerturbedHamiltonian& ph, const NormalFormResult& res,
                            std::span<const double> eps_values, std::span<const double> x0,
                            double horizon_T, const IntegratorConfig& cfg) {
    if (ph.n() != 2) throw PreconditionError("invariant-space comparison requires n = 2");
    for (double e : eps_values)
        if (!(e > 0.0 && e <= 0.2)) throw PreconditionError("eps values must lie in (0, 0.2]");
    if (horizon_T <= 0) throw PreconditionError("horizon must be positive");

    Poly h0 = ph.h0();
    ComparisonReport report;
    report.horizon_T = horizon_T;
    report.step = cfg.step;

    for (double eps : eps_values) {
        long steps = static_cast<long>(std::ceil(horizon_T / eps / cfg.step));

        CompiledHamiltonian true_h{{&h0, 1.0}, {&ph.H1, eps}, {&ph.H2, 0.5 * eps * eps}};
        CompiledHamiltonian nf2_h{
            {&h0, 1.0}, {&res.nf.coeffs[1], eps}, {&res.nf.coeffs[2], 0.5 * eps * eps}};
        CompiledHamiltonian nf1_h{{&h0, 1.0}, {&res.nf.coeffs[1], eps}};

        report.eps.push_back(eps);
        report.errors.push_back(invariant_sup_error(true_h, nf2_h, x0, steps, cfg));
        report.errors_first_order.push_back(invariant_sup_error(true_h, nf1_h, x0, steps, cfg));
    }

    // Least-squares slope of log(err) against log(eps).
    const size_t m = report.eps.size();
    if (m >= 2) {
        double sx = 0, sy = 0;
        std::vector<double> lx(m), ly(m);
        for (size_t i = 0; i < m; ++i) {
            lx[i] = std::log(report.eps[i]);
            ly[i] = std::log(std::max(report.errors[i], 1e-300));
            sx += lx[i];
            sy += ly[i];
        }
        double mx = sx / m, my = sy / m, num = 0, den = 0;
        for (size_t i = 0; i < m; ++i) {
            num += (lx[i] - mx) * (ly[i] - my);
            den += (lx[i] - mx) * (lx[i] - mx);
        }
        report.slope = num / den;
        double ss = 0;
        for (size_t i = 0; i < m; ++i) {
            double r = ly[i] - (my + report.slope * (lx[i] - mx));
            ss += r * r;
        }
        report.slope_residual = std::sqrt(ss / m);
    }
    return report;
}

}  // namespace nf
