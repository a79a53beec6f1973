#pragma once

#include <optional>
#include <vector>

#include "nf/rational.hpp"

namespace nf {

// Solution set of A x = b over the rationals, from Gauss-Jordan elimination
// processing columns left to right. particular is the solution with every
// free variable set to zero; nullspace holds one basis vector per free
// column, normalized to 1 in that coordinate.
struct ExactSolveResult {
    bool consistent = false;
    std::vector<Rational> particular;
    std::vector<int> free_cols;
    std::vector<std::vector<Rational>> nullspace;
};

ExactSolveResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace nf
