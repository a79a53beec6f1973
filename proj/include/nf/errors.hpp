#pragma once

#include <stdexcept>
#include <string>

namespace nf {

// Violated operation precondition (non-invariant input, missing parameter,
// inconsistent problem data). The CLI maps this to exit code 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nf
