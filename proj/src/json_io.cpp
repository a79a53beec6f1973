#include "nf/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace nf {

namespace {

std::string param_label(int k) { return "lambda" + std::to_string(k); }

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json doubles_to_json(const std::vector<double>& xs) {
    Json arr = Json::array();
    for (double v : xs) arr.push_back(format_double(v));
    return arr;
}

}  // namespace

Json poly_to_json(const Poly& f) {
    if (!f.is_real()) throw std::invalid_argument("only real polynomials are serialized");
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json t;
        t["exps"] = m.exps();
        t["coeff"] = to_string(c.re);
        terms.push_back(std::move(t));
    }
    Json out;
    out["n"] = f.n();
    out["terms"] = std::move(terms);
    out["text"] = f.to_string();
    return out;
}

Poly poly_from_json(const nlohmann::json& j, int n) {
    Poly f(n);
    for (const auto& t : j.at("terms")) {
        std::vector<int> exps = t.at("exps").get<std::vector<int>>();
        if (exps.size() != static_cast<size_t>(2 * n))
            throw std::invalid_argument("term exponent length mismatch");
        f.add_term(Monomial(std::move(exps)), GaussRational(rational_from_string(t.at("coeff").get<std::string>())));
    }
    return f;
}

Json hopf_poly_to_json(const HopfPoly& h) {
    Json terms = Json::array();
    for (const auto& [m, c] : h.terms) {
        Json t;
        t["wexps"] = std::vector<int>(m.e.begin(), m.e.end());
        t["c0"] = to_string(c.c0);
        Json lin = Json::object();
        for (const auto& [k, v] : c.linear) lin[param_label(k)] = to_string(v);
        t["linear"] = std::move(lin);
        terms.push_back(std::move(t));
    }
    Json params = Json::array();
    for (int k = 0; k < h.num_params; ++k) params.push_back(param_label(k));
    Json out;
    out["params"] = std::move(params);
    out["terms"] = std::move(terms);
    out["family_text"] = h.to_string();
    out["representative_text"] = HopfPoly::terms_to_string(h.representative());
    return out;
}

Json spec_to_json(const ProblemSpec& spec) {
    Json out;
    out["n"] = spec.n;
    out["modes"] = spec.modes;
    out["omega0"] = spec.omega0;
    out["H1"] = spec.H1;
    out["H2"] = spec.H2 ? Json(*spec.H2) : Json(nullptr);
    return out;
}

namespace {

Json normal_form_section(const NormalFormResult& res) {
    Json orders = Json::array();
    for (int k = 0; k < 3; ++k) {
        Json o;
        o["power"] = k;
        o["poly"] = poly_to_json(res.nf.coeffs[static_cast<size_t>(k)]);
        orders.push_back(std::move(o));
    }
    Json nf_doc;
    nf_doc["convention"] = "H o Phi = N0 + eps*N1 + (eps^2/2)*N2 + O(eps^3)";
    nf_doc["orders"] = std::move(orders);
    return nf_doc;
}

Json generators_section(const NormalFormResult& res) {
    Json g;
    g["G0"] = poly_to_json(res.G0);
    g["G1"] = poly_to_json(res.G1);
    return g;
}

}  // namespace

Json normal_form_document(const ProblemSpec& spec, const NormalFormResult& res) {
    Json doc;
    doc["command"] = "normalform";
    doc["problem"] = spec_to_json(spec);
    doc["normal_form"] = normal_form_section(res);
    doc["generators"] = generators_section(res);
    return doc;
}

Json hopf_document(const ProblemSpec& spec, const NormalFormResult& res, const HopfReport& report,
                   const std::map<int, Rational>* params) {
    Json orders = Json::array();
    for (int k = 0; k < 3; ++k) {
        Json o;
        o["power"] = k;
        o["eps_coefficient"] = hopf_poly_to_json(report.orders[static_cast<size_t>(k)]);
        if (params != nullptr)
            o["substituted"] = poly_to_json(hopf_substitute(report.orders[static_cast<size_t>(k)], *params));
        orders.push_back(std::move(o));
    }
    Json doc;
    doc["command"] = "hopf";
    doc["problem"] = spec_to_json(spec);
    doc["normal_form"] = normal_form_section(res);
    doc["generators"] = generators_section(res);
    Json hopf;
    hopf["convention"] = "H o Phi = A0 + eps*A1 + eps^2*A2 + O(eps^3), A_k in w1..w4";
    hopf["orders"] = std::move(orders);
    doc["hopf"] = std::move(hopf);
    return doc;
}

Json verify_document(const ProblemSpec& spec, const VerifyOutcome& outcome) {
    Json doc;
    doc["command"] = "verify";
    doc["problem"] = spec_to_json(spec);
    Json residual = Json::array();
    for (int k = 0; k < 3; ++k) {
        Json o;
        o["power"] = k;
        o["zero"] = outcome.residual.coeffs[static_cast<size_t>(k)].is_zero();
        o["poly"] = poly_to_json(outcome.residual.coeffs[static_cast<size_t>(k)]);
        residual.push_back(std::move(o));
    }
    doc["lie_transform_residual"] = std::move(residual);
    Json cond;
    cond["order1"] = outcome.condition.order1_ok;
    cond["order2"] = outcome.condition.order2_ok;
    doc["normal_form_condition"] = std::move(cond);
    doc["ok"] = outcome.ok();
    return doc;
}

Json dynamics_document(const ProblemSpec& spec, const ComparisonReport& report) {
    Json doc;
    doc["command"] = "dynamics";
    doc["problem"] = spec_to_json(spec);
    Json cmp;
    cmp["horizon_T"] = format_double(report.horizon_T);
    cmp["step"] = format_double(report.step);
    cmp["eps"] = doubles_to_json(report.eps);
    cmp["sup_errors"] = doubles_to_json(report.errors);
    cmp["sup_errors_first_order"] = doubles_to_json(report.errors_first_order);
    cmp["slope"] = format_double(report.slope);
    cmp["slope_residual"] = format_double(report.slope_residual);
    doc["comparison"] = std::move(cmp);
    return doc;
}

NormalFormResult normal_form_from_document(const nlohmann::json& doc, int n) {
    const auto& orders = doc.at("normal_form").at("orders");
    if (orders.size() != 3) throw std::invalid_argument("normal form document must have orders 0..2");
    EpsSeries nf{{Poly::zero(n), Poly::zero(n), Poly::zero(n)}};
    for (const auto& o : orders) {
        int k = o.at("power").get<int>();
        if (k < 0 || k > 2) throw std::invalid_argument("bad eps power");
        nf.coeffs[static_cast<size_t>(k)] = poly_from_json(o.at("poly"), n);
    }
    Poly g0 = poly_from_json(doc.at("generators").at("G0"), n);
    Poly g1 = poly_from_json(doc.at("generators").at("G1"), n);
    return NormalFormResult{std::move(nf), std::move(g0), std::move(g1)};
}

std::string normal_form_text(const ProblemSpec& spec, const NormalFormResult& res) {
    std::ostringstream out;
    out << "problem: n=" << spec.n << " modes=(";
    for (size_t i = 0; i < spec.modes.size(); ++i) out << (i ? "," : "") << spec.modes[i];
    out << ") omega0=" << spec.omega0 << "\n";
    out << "H1 = " << spec.H1 << "\n";
    if (spec.H2) out << "H2 = " << *spec.H2 << "\n";
    out << "\nsecond-order normal form, H o Phi = N0 + eps*N1 + (eps^2/2)*N2 + O(eps^3):\n";
    out << "  N0 = " << res.nf.coeffs[0].to_string() << "\n";
    out << "  N1 = " << res.nf.coeffs[1].to_string() << "\n";
    out << "  N2 = " << res.nf.coeffs[2].to_string() << "\n";
    out << "\ntransformation generators (Phi = flow of X_G0 + eps X_G1 at time eps):\n";
    out << "  G0 = " << res.G0.to_string() << "\n";
    out << "  G1 = " << res.G1.to_string() << "\n";
    return out.str();
}

std::string hopf_text(const HopfReport& report) {
    std::ostringstream out;
    out << "Hopf form, H o Phi = A0 + eps*A1 + eps^2*A2 + O(eps^3):\n";
    for (int k = 0; k < 3; ++k) {
        const HopfPoly& h = report.orders[static_cast<size_t>(k)];
        out << "  A" << k << " (family)        = " << h.to_string() << "\n";
        out << "  A" << k << " (representative) = " << HopfPoly::terms_to_string(h.representative())
            << "\n";
    }
    return out.str();
}

std::string verify_text(const VerifyOutcome& outcome) {
    std::ostringstream out;
    out << "lie transform residual:\n";
    for (int k = 0; k < 3; ++k) {
        const Poly& r = outcome.residual.coeffs[static_cast<size_t>(k)];
        out << "  order " << k << ": " << (r.is_zero() ? "0" : r.to_string()) << "\n";
    }
    out << "normal form condition: order1 " << (outcome.condition.order1_ok ? "ok" : "VIOLATED")
        << ", order2 " << (outcome.condition.order2_ok ? "ok" : "VIOLATED") << "\n";
    out << (outcome.ok() ? "verified" : "VERIFICATION FAILED") << "\n";
    return out.str();
}

std::string dynamics_text(const ComparisonReport& report) {
    std::ostringstream out;
    out << "invariant-space comparison over t in [0, T/eps], T=" << report.horizon_T
        << ", step=" << report.step << "\n";
    out << "  eps        sup|dw| (2nd order)   sup|dw| (1st order)\n";
    char line[128];
    for (size_t i = 0; i < report.eps.size(); ++i) {
        std::snprintf(line, sizeof(line), "  %-9g  %-20.6e  %-20.6e\n", report.eps[i],
                      report.errors[i], report.errors_first_order[i]);
        out << line;
    }
    std::snprintf(line, sizeof(line), "fitted log-log slope: %.4f (rms residual %.4f)\n",
                  report.slope, report.slope_residual);
    out << line;
    return out.str();
}

}  // namespace nf
