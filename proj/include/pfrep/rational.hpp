// rational.hpp — exact rationals on top of GMP, plus parsing/printing helpers.
//
// Rat is always kept in canonical form (gcd(num, den) = 1, den > 0); GMP's
// mpq_class guarantees this as long as values are built through canonical
// operations, which all helpers here do.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pfrep {

using Rat = mpq_class;
using Int = mpz_class;

// "p", "-p", "p/q" with optional whitespace; q > 0 enforced by canonicalization.
Rat rat_parse(const std::string& s);

// Canonical "p/q" (always includes the denominator, also for integers),
// matching the JSON field-element encoding.
std::string rat_str(const Rat& a);

// Human form: "p" when q = 1, else "p/q".
std::string rat_str_short(const Rat& a);

// lcm of denominators; 1 for an empty list.
Int common_denominator(const std::vector<Rat>& v);

// gcd of numerators of v*den — content of an integer vector.
Int integer_content(const std::vector<Int>& v);

} // namespace pfrep
