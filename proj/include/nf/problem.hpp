#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nf/normalform.hpp"

namespace nf {

// Parsed problem specification: the JSON schema accepted by the CLI.
// {
//   "n": 2,
//   "modes": [1, 1],
//   "omega0": "1",
//   "H1": "q1^3/3 - q1*q2^2",
//   "H2": "..."            // optional
// }
struct ProblemSpec {
    int n = 0;
    std::vector<int> modes;
    std::string omega0 = "1";
    std::string H1;
    std::optional<std::string> H2;

    PerturbedHamiltonian build() const;
};

// Loads and validates a spec from JSON text. Grammar and schema violations
// (malformed JSON, missing H1, unknown variables, bad literals) raise
// ParseError; FrequencyData invariant violations surface as
// std::invalid_argument from build().
ProblemSpec parse_spec(const std::string& json_text);
ProblemSpec load_spec_file(const std::string& path);

}  // namespace nf
