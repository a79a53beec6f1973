// nf: second-order normal forms of perturbed Hamiltonians relative to the
// periodic flow of a resonant harmonic oscillator.
//
// Subcommands:
//   normalform  compute the normal form and generators (optionally --hopf)
//   hopf        normal form expressed in the Hopf variables (n=2, modes 1,1)
//   verify      re-derive via the Lie transform and check the Deprit condition
//   dynamics    long-time trajectory comparison in invariant space
//
// Exit codes: 0 ok, 2 parse error, 3 precondition failure, 4 verification failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "nf/dynamics.hpp"
#include "nf/errors.hpp"
#include "nf/hopf.hpp"
#include "nf/json_io.hpp"
#include "nf/normalform.hpp"
#include "nf/parse.hpp"
#include "nf/problem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

struct CommonOpts {
    std::string spec_path;
    std::string format = "text";
    std::vector<std::string> params;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--spec", opts.spec_path, "problem specification file (JSON)")->required();
    cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

std::map<int, nf::Rational> parse_params(const std::vector<std::string>& raw) {
    std::map<int, nf::Rational> out;
    for (const auto& s : raw) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw nf::ParseError("--param expects NAME=VALUE, got '" + s + "'", 1, 1);
        std::string name = s.substr(0, eq);
        if (name.rfind("lambda", 0) != 0)
            throw nf::ParseError("unknown parameter '" + name + "' (expected lambdaK)", 1, 1);
        int idx = 0;
        try {
            idx = std::stoi(name.substr(6));
        } catch (const std::exception&) {
            throw nf::ParseError("unknown parameter '" + name + "'", 1, 1);
        }
        out[idx] = nf::rational_from_string(s.substr(eq + 1));
    }
    return out;
}

void emit(const nf::Json& doc, const std::string& text, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

void write_trajectory_csv(const std::string& path, const nf::Trajectory& traj) {
    std::ofstream out(path);
    const size_t dim = traj.states.empty() ? 0 : traj.states.front().size();
    const size_t n = dim / 2;
    out << "t";
    for (size_t j = 1; j <= n; ++j) out << ",q" << j;
    for (size_t j = 1; j <= n; ++j) out << ",p" << j;
    if (dim == 4) out << ",w1,w2,w3,w4";
    out << "\n";
    for (size_t k = 0; k < traj.states.size(); ++k) {
        const auto& x = traj.states[k];
        out << k * traj.step;
        for (double v : x) out << "," << v;
        if (dim == 4)
            for (double v : nf::hopf_values(x)) out << "," << v;
        out << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"second-order normal forms relative to periodic oscillator flows"};
    app.require_subcommand(1);

    CommonOpts nf_opts, hopf_opts, verify_opts, dyn_opts;
    bool with_hopf = false;

    auto* nf_cmd = app.add_subcommand("normalform", "compute the second-order normal form");
    add_common(nf_cmd, nf_opts);
    nf_cmd->add_flag("--hopf", with_hopf, "also report the Hopf-variable form");
    nf_cmd->add_option("--param", nf_opts.params, "Hopf family parameter assignment NAME=VALUE");

    auto* hopf_cmd = app.add_subcommand("hopf", "normal form in the Hopf variables");
    add_common(hopf_cmd, hopf_opts);
    hopf_cmd->add_option("--param", hopf_opts.params, "Hopf family parameter assignment NAME=VALUE");

    std::string nf_doc_path;
    auto* verify_cmd = app.add_subcommand("verify", "verify a normal form symbolically");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--nf", nf_doc_path,
                           "previously emitted normal-form document to verify (default: recompute)");

    double horizon_T = 10.0, step = 0.005;
    std::vector<double> eps_values{0.04, 0.02, 0.01};
    std::vector<double> x0;
    std::string csv_prefix;
    auto* dyn_cmd = app.add_subcommand("dynamics", "trajectory comparison against the normal form");
    add_common(dyn_cmd, dyn_opts);
    dyn_cmd->add_option("--eps", eps_values, "epsilon values");
    dyn_cmd->add_option("--t", horizon_T, "horizon constant T (integration time T/eps)");
    dyn_cmd->add_option("--h", step, "integrator step size");
    dyn_cmd->add_option("--x0", x0, "initial point q1..qn p1..pn");
    dyn_cmd->add_option("--csv", csv_prefix, "write trajectory CSV files with this prefix");

    CLI11_PARSE(app, argc, argv);

    if (nf_cmd->parsed()) {
        nf::ProblemSpec spec = nf::load_spec_file(nf_opts.spec_path);
        nf::PerturbedHamiltonian ph = spec.build();
        nf::NormalFormResult res = nf::second_order_nf(ph);
        if (with_hopf || !nf_opts.params.empty()) {
            nf::HopfReport report = nf_to_hopf(res, ph.freq);
            auto params = parse_params(nf_opts.params);
            nf::Json doc = nf::hopf_document(spec, res, report, nf_opts.params.empty() ? nullptr : &params);
            doc["command"] = "normalform";
            emit(doc, nf::normal_form_text(spec, res) + "\n" + nf::hopf_text(report), nf_opts.format);
        } else {
            emit(nf::normal_form_document(spec, res), nf::normal_form_text(spec, res), nf_opts.format);
        }
        return kExitOk;
    }

    if (hopf_cmd->parsed()) {
        nf::ProblemSpec spec = nf::load_spec_file(hopf_opts.spec_path);
        nf::PerturbedHamiltonian ph = spec.build();
        nf::NormalFormResult res = nf::second_order_nf(ph);
        nf::HopfReport report = nf_to_hopf(res, ph.freq);
        auto params = parse_params(hopf_opts.params);
        nf::Json doc = nf::hopf_document(spec, res, report, hopf_opts.params.empty() ? nullptr : &params);
        emit(doc, nf::hopf_text(report), hopf_opts.format);
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        nf::ProblemSpec spec = nf::load_spec_file(verify_opts.spec_path);
        nf::PerturbedHamiltonian ph = spec.build();
        nf::NormalFormResult res = [&] {
            if (nf_doc_path.empty()) return nf::second_order_nf(ph);
            std::ifstream in(nf_doc_path);
            if (!in) throw nf::ParseError("cannot open normal-form document '" + nf_doc_path + "'", 1, 1);
            nlohmann::json doc = nlohmann::json::parse(in, nullptr, true);
            return nf::normal_form_from_document(doc, spec.n);
        }();
        nf::VerifyOutcome outcome{nf::lie_transform_residual(ph, res),
                                  nf::normal_form_condition(res, ph.freq)};
        emit(nf::verify_document(spec, outcome), nf::verify_text(outcome), verify_opts.format);
        return outcome.ok() ? kExitOk : kExitVerification;
    }

    if (dyn_cmd->parsed()) {
        nf::ProblemSpec spec = nf::load_spec_file(dyn_opts.spec_path);
        nf::PerturbedHamiltonian ph = spec.build();
        nf::NormalFormResult res = nf::second_order_nf(ph);
        if (x0.empty()) {
            if (spec.n != 2)
                throw nf::PreconditionError("--x0 is required for n != 2");
            x0 = {0.3, 0.2, 0.1, 0.4};
        }
        if (x0.size() != static_cast<size_t>(2 * spec.n))
            throw nf::PreconditionError("--x0 must list 2n coordinates");
        nf::IntegratorConfig cfg;
        cfg.step = step;
        nf::ComparisonReport report = nf::compare_nf(ph, res, eps_values, x0, horizon_T, cfg);
        if (!csv_prefix.empty()) {
            nf::Poly h0 = ph.h0();
            for (double eps : eps_values) {
                nf::IntegratorConfig tc = cfg;
                tc.steps = static_cast<long>(std::ceil(horizon_T / eps / cfg.step));
                nf::CompiledHamiltonian true_h{{&h0, 1.0}, {&ph.H1, eps}, {&ph.H2, 0.5 * eps * eps}};
                nf::CompiledHamiltonian nf_h{
                    {&h0, 1.0}, {&res.nf.coeffs[1], eps}, {&res.nf.coeffs[2], 0.5 * eps * eps}};
                std::string tag = csv_prefix + "_eps" + std::to_string(eps);
                write_trajectory_csv(tag + "_true.csv", nf::integrate(true_h, x0, tc));
                write_trajectory_csv(tag + "_nf.csv", nf::integrate(nf_h, x0, tc));
            }
        }
        emit(nf::dynamics_document(spec, report), nf::dynamics_text(report), dyn_opts.format);
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nf::PreconditionError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const nf::IntegratorError& e) {
        std::cerr << "integrator failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
