#ifndef LACE_RATIONAL_HPP
#define LACE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "lace/errors.hpp"

namespace lace {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "3", "-7" or "3/4"; canonicalizes.  Throws ParseError on anything
// else (including a zero denominator).
Rat parse_rational(const std::string& text);

// Canonical text form: "3", "-7", "3/4".
std::string rational_to_string(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace lace

#endif  // LACE_RATIONAL_HPP
