#include "nf/hopf.hpp"

#include <algorithm>
#include <stdexcept>

#include "nf/errors.hpp"
#include "nf/exact_linalg.hpp"

namespace nf {

namespace {

const FrequencyData& hopf_action() {
    static const FrequencyData freq({1, 1}, Rational(1));
    return freq;
}

std::vector<WMonomial> w_monomials_of_degree(int d) {
    std::vector<WMonomial> out;
    for (int e1 = d; e1 >= 0; --e1)
        for (int e2 = d - e1; e2 >= 0; --e2)
            for (int e3 = d - e1 - e2; e3 >= 0; --e3)
                out.push_back(WMonomial{{e1, e2, e3, d - e1 - e2 - e3}});
    std::sort(out.begin(), out.end());
    return out;
}

std::string w_monomial_text(const WMonomial& m) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (m.e[static_cast<size_t>(i)] == 0) continue;
        if (!out.empty()) out += "*";
        out += "w" + std::to_string(i + 1);
        if (m.e[static_cast<size_t>(i)] > 1) out += "^" + std::to_string(m.e[static_cast<size_t>(i)]);
    }
    return out;
}

std::string param_name(int k) { return "lambda" + std::to_string(k); }

std::string signed_rational_text(const Rational& r, bool leading) {
    std::string mag = nf::to_string(r < 0 ? Rational(-r) : r);
    if (leading) return (r < 0 ? "-" : "") + mag;
    return (r < 0 ? " - " : " + ") + mag;
}

}  // namespace

Rational AffineCoeff::at(const std::map<int, Rational>& params) const {
    Rational v = c0;
    for (const auto& [k, c] : linear) {
        auto it = params.find(k);
        if (it == params.end())
            throw PreconditionError("missing parameter value for " + param_name(k));
        v += c * it->second;
    }
    return v;
}

std::map<WMonomial, Rational> HopfPoly::representative() const {
    std::map<WMonomial, Rational> out;
    for (const auto& [m, c] : terms)
        if (c.c0 != 0) out.emplace(m, c.c0);
    return out;
}

std::string HopfPoly::terms_to_string(const std::map<WMonomial, Rational>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string mono = w_monomial_text(m);
        bool neg = c < 0;
        std::string mag = nf::to_string(neg ? Rational(-c) : c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mono.empty())
            out += mag;
        else if (mag == "1")
            out += mono;
        else
            out += mag + "*" + mono;
    }
    return out;
}

std::string HopfPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string mono = w_monomial_text(m);
        std::string coeff;
        bool wrap = false;
        if (c.linear.empty()) {
            coeff = nf::to_string(c.c0);
        } else if (c.c0 == 0 && c.linear.size() == 1) {
            const auto& [k, v] = *c.linear.begin();
            if (v == 1)
                coeff = param_name(k);
            else if (v == -1)
                coeff = "-" + param_name(k);
            else
                coeff = nf::to_string(v) + "*" + param_name(k);
        } else {
            wrap = true;
            coeff = c.c0 == 0 ? "" : signed_rational_text(c.c0, true);
            for (const auto& [k, v] : c.linear) {
                if (coeff.empty())
                    coeff += (v < 0 ? "-" : "") + (v == 1 || v == -1 ? "" : nf::to_string(v < 0 ? Rational(-v) : v) + "*");
                else
                    coeff += (v < 0 ? " - " : " + ") + (v == 1 || v == -1 ? "" : nf::to_string(v < 0 ? Rational(-v) : v) + "*");
                coeff += param_name(k);
            }
            coeff = "(" + coeff + ")";
        }
        if (!out.empty()) out += " + ";
        if (mono.empty())
            out += coeff;
        else if (coeff == "1")
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

const std::array<Poly, 4>& hopf_generators() {
    static const std::array<Poly, 4> gens = [] {
        const int n = 2;
        Poly q1 = Poly::q(n, 0), q2 = Poly::q(n, 1), p1 = Poly::p(n, 0), p2 = Poly::p(n, 1);
        return std::array<Poly, 4>{
            (q1 * q2 + p1 * p2).scaled(GaussRational(2)),
            (q1 * p2 - q2 * p1).scaled(GaussRational(2)),
            q1 * q1 + p1 * p1 - q2 * q2 - p2 * p2,
            q1 * q1 + q2 * q2 + p1 * p1 + p2 * p2,
        };
    }();
    return gens;
}

const std::map<WMonomial, Rational>& syzygy() {
    static const std::map<WMonomial, Rational> rel = {
        {WMonomial{{2, 0, 0, 0}}, Rational(1)},
        {WMonomial{{0, 2, 0, 0}}, Rational(1)},
        {WMonomial{{0, 0, 2, 0}}, Rational(1)},
        {WMonomial{{0, 0, 0, 2}}, Rational(-1)},
    };
    return rel;
}

Poly expand_w_monomial(const WMonomial& m) {
    Poly out = Poly::constant(2, GaussRational(1));
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < m.e[static_cast<size_t>(i)]; ++k)
            out = out * hopf_generators()[static_cast<size_t>(i)];
    return out;
}

namespace detail {

HopfPoly rewrite_homogeneous(const Poly& f, int degree, int param_base) {
    if (degree % 2 != 0)
        throw PreconditionError("odd-degree component is not representable in the Hopf variables");
    if (f.is_zero()) return {};
    const int d = degree / 2;

    std::vector<WMonomial> cands = w_monomials_of_degree(d);
    std::vector<Poly> expansions;
    expansions.reserve(cands.size());
    for (const auto& wm : cands) expansions.push_back(expand_w_monomial(wm));

    // Row space: every (q,p) monomial seen in f or any candidate expansion.
    std::map<Monomial, size_t> row_of;
    auto intern = [&](const Monomial& m) {
        row_of.emplace(m, row_of.size());
    };
    for (const auto& [m, c] : f.terms()) intern(m);
    for (const auto& e : expansions)
        for (const auto& [m, c] : e.terms()) intern(m);

    std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(cands.size(), Rational(0)));
    std::vector<Rational> b(row_of.size(), Rational(0));
    for (size_t col = 0; col < cands.size(); ++col)
        for (const auto& [m, c] : expansions[col].terms()) a[row_of.at(m)][col] = c.re;
    for (const auto& [m, c] : f.terms()) b[row_of.at(m)] = c.re;

    ExactSolveResult sol = solve_exact(std::move(a), std::move(b));
    if (!sol.consistent)
        throw PreconditionError("polynomial is not in the span of the Hopf monomials");

    HopfPoly out;
    out.num_params = static_cast<int>(sol.free_cols.size());
    for (size_t col = 0; col < cands.size(); ++col) {
        AffineCoeff c;
        c.c0 = sol.particular[col];
        for (size_t k = 0; k < sol.free_cols.size(); ++k) {
            const Rational& v = sol.nullspace[k][col];
            if (v != 0) c.linear.emplace(param_base + static_cast<int>(k), v);
        }
        if (!c.is_zero()) out.terms.emplace(cands[col], std::move(c));
    }
    return out;
}

}  // namespace detail

HopfPoly hopf_rewrite(const Poly& f) {
    if (f.n() != 2) throw PreconditionError("Hopf rewriting requires n = 2");
    if (!f.is_real()) throw PreconditionError("Hopf rewriting requires a real polynomial");
    Poly witness = lie_upsilon(f, hopf_action());
    if (!witness.is_zero())
        throw PreconditionError("polynomial is not S^1-invariant; lie_upsilon witness: " + witness.to_string());

    HopfPoly out;
    for (int deg : f.degrees_present()) {
        Poly comp = f.homogeneous_part(deg);
        HopfPoly part = detail::rewrite_homogeneous(comp, deg, out.num_params);
        out.num_params += part.num_params;
        for (auto& [m, c] : part.terms) out.terms.emplace(m, std::move(c));
    }
    return out;
}

Poly hopf_substitute(const HopfPoly& h, const std::map<int, Rational>& params) {
    Poly out(2);
    for (const auto& [m, c] : h.terms) {
        Rational v = c.at(params);
        if (v == 0) continue;
        out += expand_w_monomial(m).scaled(GaussRational(v));
    }
    return out;
}

HopfReport nf_to_hopf(const NormalFormResult& res, const FrequencyData& freq) {
    if (freq.n() != 2 || freq.modes() != std::vector<int>{1, 1})
        throw PreconditionError("Hopf report requires n = 2 with modes (1,1)");
    HopfReport report;
    report.orders[0] = hopf_rewrite(res.nf.coeffs[0]);
    report.orders[1] = hopf_rewrite(res.nf.coeffs[1]);
    report.orders[2] = hopf_rewrite(res.nf.coeffs[2].divided(Rational(2)));
    return report;
}

}  // namespace nf
