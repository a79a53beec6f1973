#pragma once

#include <stdexcept>
#include <string>

#include "nf/poly.hpp"

namespace nf {

// Syntax error with 1-based position information. The CLI maps this to
// exit code 2.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int ln, int col)
        : std::runtime_error(msg + " at line " + std::to_string(ln) + ", column " + std::to_string(col)),
          line(ln),
          column(col) {}
};

// Parses the polynomial expression grammar over q1..qN, p1..pN:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('+' | '-') factor | primary ('^' integer)?
//   primary:= integer | variable | '(' expr ')'
// Whitespace is insignificant. Coefficients stay exact: integer literals
// only, rationals written a/b; '/' by a non-constant divisor is an error;
// float literals are rejected. Variables q_k/p_k with k > n are rejected.
Poly parse_polynomial(const std::string& text, int n);

}  // namespace nf
