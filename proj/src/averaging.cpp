#include "nf/averaging.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "nf/poisson.hpp"

namespace nf {

FrequencyData::FrequencyData(std::vector<int> modes, Rational omega0)
    : modes_(std::move(modes)), omega0_(std::move(omega0)) {
    if (modes_.empty()) throw std::invalid_argument("at least one mode required");
    int g = 0;
    for (int m : modes_) {
        if (m <= 0) throw std::invalid_argument("modes must be positive integers");
        g = std::gcd(g, m);
    }
    if (g != 1) throw std::invalid_argument("mode vector must have gcd 1");
    if (omega0_ <= 0) throw std::invalid_argument("omega0 must be positive");
}

Poly FrequencyData::h0() const {
    const int dim = n();
    Poly h(dim);
    const GaussRational half(Rational(1, 2));
    for (int j = 0; j < dim; ++j) {
        GaussRational c = half * GaussRational(Rational(modes_[static_cast<size_t>(j)]) * omega0_);
        h += (Poly::q(dim, j) * Poly::q(dim, j)).scaled(c);
        h += (Poly::p(dim, j) * Poly::p(dim, j)).scaled(c);
    }
    return h;
}

int phase_weight(const Monomial& ab, const FrequencyData& freq) {
    const int n = freq.n();
    if (ab.nvars() != 2 * n) throw std::invalid_argument("monomial size mismatch");
    int k = 0;
    for (int j = 0; j < n; ++j) k += freq.modes()[static_cast<size_t>(j)] * (ab.exp(j) - ab.exp(n + j));
    return kActionDirection * k;
}

Poly average(const Poly& f, const FrequencyData& freq) {
    if (f.n() != freq.n()) throw std::invalid_argument("polynomial dimension mismatch");
    ComplexBasisPoly cb = to_complex_basis(f);
    ComplexBasisPoly::TermMap kept;
    for (const auto& [m, c] : cb.terms())
        if (phase_weight(m, freq) == 0) kept.emplace(m, c);
    return from_complex_basis(ComplexBasisPoly(f.n(), std::move(kept)));
}

Poly s_op(const Poly& f, const FrequencyData& freq) {
    if (f.n() != freq.n()) throw std::invalid_argument("polynomial dimension mismatch");
    ComplexBasisPoly cb = to_complex_basis(f);
    ComplexBasisPoly::TermMap scaled;
    for (const auto& [m, c] : cb.terms()) {
        int k = phase_weight(m, freq);
        if (k == 0) continue;
        // (1/2pi) int_0^{2pi} (t-pi) e^{ikt} dt = 1/(ik) = -i/k.
        GaussRational factor(Rational(0), make_rational(-1, k));
        scaled.emplace(m, c * factor);
    }
    return from_complex_basis(ComplexBasisPoly(f.n(), std::move(scaled)));
}

Poly lie_upsilon(const Poly& f, const FrequencyData& freq) {
    return bracket(freq.h0(), f).divided(freq.omega0());
}

std::vector<double> action_flow(const FrequencyData& freq, std::span<const double> point, double t) {
    const int n = freq.n();
    if (point.size() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("point has wrong length");
    std::vector<double> out(point.begin(), point.end());
    for (int j = 0; j < n; ++j) {
        double ang = kActionDirection * freq.modes()[static_cast<size_t>(j)] * t;
        double c = std::cos(ang), s = std::sin(ang);
        double q = point[static_cast<size_t>(j)], p = point[static_cast<size_t>(n + j)];
        out[static_cast<size_t>(j)] = q * c - p * s;
        out[static_cast<size_t>(n + j)] = q * s + p * c;
    }
    return out;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on the Legendre polynomial.
struct GaussRule {
    std::vector<double> nodes, weights;
    explicit GaussRule(int npts) {
        nodes.resize(static_cast<size_t>(npts));
        weights.resize(static_cast<size_t>(npts));
        for (int i = 0; i < npts; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (npts + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= npts; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = npts * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= npts; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = npts * (x * p1 - p0) / (x * x - 1.0);
            nodes[static_cast<size_t>(i)] = x;
            weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

}  // namespace

double quadrature_oracle(const Poly& f, const FrequencyData& freq,
                         std::span<const double> point, AveragingKind which) {
    if (!f.is_real()) throw std::invalid_argument("oracle requires a real polynomial");
    static const GaussRule rule(16);
    const int panels = 32;
    const double two_pi = 2.0 * std::numbers::pi;
    const double width = two_pi / panels;
    double acc = 0.0;
    for (int pn = 0; pn < panels; ++pn) {
        double a = pn * width;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            double t = a + 0.5 * width * (rule.nodes[i] + 1.0);
            std::vector<double> x = action_flow(freq, point, t);
            double v = f.eval_double(x);
            if (which == AveragingKind::S) v *= (t - std::numbers::pi);
            acc += 0.5 * width * rule.weights[i] * v;
        }
    }
    return acc / two_pi;
}

}  // namespace nf
