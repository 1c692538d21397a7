#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "hodge/cyclo.hpp"
#include "hodge/polynomial.hpp"

namespace hodge {

// Parses a Q-linear combination of z(m)^k tokens, e.g. "1/2 + 3*z(6)^2".
Cyclo parse_cyclo(const std::string& text);

// Parses the polynomial grammar: terms joined by +/-, coefficients either
// rationals or parenthesized cyclotomic combinations, variables x0..x{nvars-1},
// powers with ^. Example: "(1/2 + 3*z(6)^2)*x0^2*x3 - x1^3".
// Throws ParseError with 1-based line/column information.
Polynomial parse_polynomial(const std::string& text, long nvars);

// --- Problem files -----------------------------------------------------------
//
// Line-oriented key = value blocks:
//
//   [ring]
//   nvars = 2
//   d = 6
//   order = grevlex            # optional: grevlex (default) | lex
//
//   [hypersurface]
//   F = x0^6 + x1^6
//
//   [cycle NAME]
//   kind = linear | point | fake-point | join | combination | raw
//   ... kind-specific keys (c, r, left, right, parts, P)
//
//   [task]
//   op = hilbert_function | colon_basis | qff_vanishes | verdict | gorenstein
//   cycle = NAME
//   ... op-specific keys (degree)
//
// '#' starts a comment; blank lines separate nothing in particular.
// Unknown section names and unknown keys are rejected.

struct CycleBlock {
    std::string name;
    std::string kind;
    std::map<std::string, std::string> entries;
    int line = 0; // where the block starts, for error messages
};

struct TaskBlock {
    std::string op;
    std::map<std::string, std::string> params;
    int line = 0;
};

struct ProblemFile {
    long nvars = 0;
    int d = 0;
    MonomialOrder order = MonomialOrder::Grevlex;
    std::string hypersurface; // polynomial grammar text
    std::vector<CycleBlock> cycles;
    std::vector<TaskBlock> tasks;
};

ProblemFile parse_problem_file(std::istream& in);
ProblemFile parse_problem_file_text(const std::string& text);

} // namespace hodge
