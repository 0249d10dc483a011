// factor.hpp — univariate factorization over a number field.
//
// Over Q this delegates to the integer factorization in zpoly.hpp. Over a
// proper extension K = Q(alpha) it uses the norm map: shift f by multiples of
// alpha until the norm (a resultant, degree deg(f)*[K:Q] over Q) is
// squarefree, factor the norm over Q, and recover the K-factors as gcds.
#pragma once

#include "pfrep/unipoly.hpp"

#include <utility>
#include <vector>

namespace pfrep {

struct FactorList {
    AN constant; // overall scalar: f = constant * prod factors[i].first ^ .second
    std::vector<std::pair<UniPoly, int>> factors; // monic irreducible, sorted
};

// Full factorization of a nonzero polynomial over its coefficient field.
// Factor order is deterministic: (degree, coefficient sequence from the top).
// Throws DegreeCapExceeded when deg(f) * [K:Q] exceeds 12.
FactorList factor(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

// Roots of f lying in the coefficient field, with multiplicity, sorted.
std::vector<std::pair<AN, int>> roots_in_field(const UniPoly& f);

} // namespace pfrep
