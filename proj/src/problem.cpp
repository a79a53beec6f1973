#include "nf/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nf/parse.hpp"

namespace nf {

PerturbedHamiltonian ProblemSpec::build() const {
    Rational w0;
    try {
        w0 = rational_from_string(omega0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad omega0: ") + e.what(), 1, 1);
    }
    FrequencyData freq(modes, w0);  // validates modes and omega0
    Poly h1 = parse_polynomial(H1, n);
    Poly h2 = H2 ? parse_polynomial(*H2, n) : Poly::zero(n);
    return PerturbedHamiltonian(std::move(freq), std::move(h1), std::move(h2));
}

ProblemSpec parse_spec(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    auto require = [&](const char* key) {
        if (!doc.contains(key)) throw ParseError(std::string(key) + " required", 1, 1);
    };
    require("n");
    require("modes");
    require("H1");
    ProblemSpec spec;
    try {
        spec.n = doc.at("n").get<int>();
        spec.modes = doc.at("modes").get<std::vector<int>>();
        if (doc.contains("omega0")) {
            const auto& w = doc.at("omega0");
            spec.omega0 = w.is_string() ? w.get<std::string>() : w.dump();
        }
        spec.H1 = doc.at("H1").get<std::string>();
        if (doc.contains("H2") && !doc.at("H2").is_null())
            spec.H2 = doc.at("H2").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad spec field: ") + e.what(), 1, 1);
    }
    if (spec.n <= 0) throw ParseError("n must be positive", 1, 1);
    if (static_cast<int>(spec.modes.size()) != spec.n)
        throw ParseError("modes list must have length n", 1, 1);
    if (spec.H1.empty()) throw ParseError("H1 required", 1, 1);
    return spec;
}

ProblemSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'", 1, 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

}  // namespace nf
