#ifndef HODGE_RATIONAL_HPP
#define HODGE_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "hodge/errors.hpp"

namespace hodge {

// Exact rationals. mpq_class keeps the canonical form we require:
// gcd(|num|, den) = 1 and den > 0.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a", "-a" or "a/b". Throws ParseError on malformed input.
Rat parse_rat(const std::string& text);

// Prints "a" or "a/b" (no spaces); parseable by parse_rat.
std::string rat_to_string(const Rat& r);

} // namespace hodge

#endif
